#include "stepseq/core.hpp"

#include <bit>

namespace stepseq {

int hamming_weight(std::uint64_t c) noexcept {
    return std::popcount(c);
}

int v2(std::uint64_t c) {
    if (c == 0) {
        throw std::domain_error("v2: the 2-adic valuation of 0 is undefined");
    }
    return std::countr_zero(c);
}

bool is_well_formed(const SteppingSequence& seq) noexcept {
    for (std::size_t k = 0; k < seq.moves.size(); ++k) {
        int mv = seq.moves[k];
        if (mv < 1 || mv > seq.m - 1) return false;
        if (k > 0 && mv == seq.moves[k - 1]) return false;
    }
    return true;
}

std::uint64_t stepping_length(int m) noexcept {
    if (m >= 64) return ~std::uint64_t{0} - 64; // 2^64 - 65
    return (std::uint64_t{1} << m) - std::uint64_t(m) - 1;
}

DifferenceSequence::DifferenceSequence(int m) : m_(m) {
    if (m < 1 || m > kMaxWidth) {
        throw std::domain_error("DifferenceSequence: m must be in [1, 64]");
    }
    for (int i = 0; i < m; ++i) q_[i] = static_cast<std::uint8_t>(i);
}

int DifferenceSequence::label(int i) const {
    if (i < 1 || i > m_) throw std::domain_error("label: index out of [1, m]");
    return q_[i - 1];
}

Mask DifferenceSequence::subset(int i) const {
    if (i < 0 || i > m_) throw std::domain_error("subset: index out of [0, m]");
    Mask s = 0;
    for (int k = 0; k < i; ++k) s |= Mask{1} << q_[k];
    return s;
}

std::vector<int> DifferenceSequence::labels() const {
    return std::vector<int>(q_.begin(), q_.begin() + m_);
}

DifferenceSequence new_chain(int m) {
    if (m < 2 || m > kMaxWidth) {
        throw std::domain_error("new_chain: m must be in [2, 64]");
    }
    return DifferenceSequence(m);
}

std::pair<DifferenceSequence, Mask> apply_move(const DifferenceSequence& chain, int i) {
    if (i < 1 || i > chain.m() - 1) {
        throw std::domain_error("apply_move: move index out of [1, m-1]");
    }
    DifferenceSequence next = chain;
    std::swap(next.q_[i - 1], next.q_[i]);
    return {next, next.subset(i)};
}

Mask subset_at(const DifferenceSequence& chain, int i) {
    return chain.subset(i);
}

ChainSimulator::ChainSimulator(int m) : m_(m) {
    if (m < 1 || m > kMaxWidth) {
        throw std::domain_error("ChainSimulator: m must be in [1, 64]");
    }
    for (int i = 0; i < m; ++i) {
        q_[i] = static_cast<std::uint8_t>(i);
        mask_[i + 1] = low_mask(i + 1);
    }
}

ChainSimulator::ChainSimulator(const DifferenceSequence& chain) : m_(chain.m()) {
    Mask s = 0;
    for (int i = 0; i < m_; ++i) {
        q_[i] = static_cast<std::uint8_t>(chain.label(i + 1));
        s |= Mask{1} << q_[i];
        mask_[i + 1] = s;
    }
}

DifferenceSequence ChainSimulator::chain() const {
    DifferenceSequence out(m_);
    out.q_ = q_;
    return out;
}

std::string to_string(FailureReason reason) {
    switch (reason) {
        case FailureReason::RepeatedSubset: return "repeated-subset";
        case FailureReason::InitialSubsetRevisited: return "initial-subset-revisited";
        case FailureReason::WrongLength: return "wrong-length";
        case FailureReason::IndexOutOfRange: return "index-out-of-range";
        case FailureReason::ConsecutiveEqualMoves: return "consecutive-equal-moves";
    }
    return "unknown";
}

namespace {

VerificationReport fail_at(std::uint64_t step, FailureReason reason,
                           std::optional<Mask> subset = std::nullopt) {
    VerificationReport report;
    report.valid = false;
    report.failure_step = step;
    report.reason = reason;
    report.repeated_subset = subset;
    return report;
}

} // namespace

VerificationReport verify(const SteppingSequence& seq, int limit) {
    if (seq.m < 1 || seq.m > kMaxWidth) {
        throw std::domain_error("verify: m must be in [1, 64]");
    }
    if (seq.m > limit) {
        throw ResourceLimitError("verify: m exceeds the verification limit (" +
                                 std::to_string(limit) + "); the visited table needs 2^m bits");
    }

    const int m = seq.m;
    const std::uint64_t required = stepping_length(m);

    ChainSimulator sim(m);
    // one bit per subset mask; initial sets pre-marked so revisiting them is a failure
    std::vector<std::uint64_t> visited((std::size_t{1} << m) / 64 + 1, 0);
    auto mark = [&](Mask s) { visited[s >> 6] |= std::uint64_t{1} << (s & 63); };
    auto seen = [&](Mask s) { return (visited[s >> 6] >> (s & 63)) & 1; };
    for (int i = 0; i <= m; ++i) mark(low_mask(i));

    int prev = 0;
    for (std::size_t k = 0; k < seq.moves.size(); ++k) {
        const std::uint64_t step = k + 1;
        const int mv = seq.moves[k];
        if (mv < 1 || mv > m - 1) {
            return fail_at(step, FailureReason::IndexOutOfRange);
        }
        if (k > 0 && mv == prev) {
            return fail_at(step, FailureReason::ConsecutiveEqualMoves);
        }
        const Mask s = sim.apply(mv);
        if (s == low_mask(mv)) {
            // a move of index i regenerated the initial S_i
            return fail_at(step, FailureReason::InitialSubsetRevisited, s);
        }
        if (seen(s)) {
            return fail_at(step, FailureReason::RepeatedSubset, s);
        }
        mark(s);
        prev = mv;
    }

    if (seq.moves.size() != required) {
        VerificationReport report;
        report.valid = false;
        report.reason = FailureReason::WrongLength;
        return report;
    }
    VerificationReport report;
    report.valid = true;
    return report;
}

std::vector<std::uint64_t> occurrence_profile(const SteppingSequence& seq) {
    const int slots = seq.m > 1 ? seq.m - 1 : 0;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(slots), 0);
    for (int mv : seq.moves) {
        if (mv < 1 || mv > slots) {
            throw std::domain_error("occurrence_profile: move index out of [1, m-1]");
        }
        ++counts[mv - 1];
    }
    return counts;
}

} // namespace stepseq
