#include "stepseq/graycode.hpp"

#include <bit>
#include <cstdlib>

namespace stepseq {

GrayOrdering to_ordering(const SteppingSequence& seq, int verify_limit) {
    const VerificationReport report = verify(seq, verify_limit);
    if (!report.valid) {
        throw std::domain_error("to_ordering: not a stepping sequence (" +
                                to_string(*report.reason) + ")");
    }
    GrayOrdering ordering;
    ordering.m = seq.m;
    ordering.words.reserve(std::size_t{1} << seq.m);
    for (int i = 0; i <= seq.m; ++i) ordering.words.push_back(low_mask(i));
    ChainSimulator sim(seq.m);
    for (int mv : seq.moves) ordering.words.push_back(sim.apply(mv));
    return ordering;
}

bool is_contiguous(const SteppingSequence& seq) noexcept {
    for (std::size_t p = 0; p + 1 < seq.moves.size(); ++p) {
        if (std::abs(seq.moves[p] - seq.moves[p + 1]) != 1) return false;
    }
    return true;
}

bool is_strongly_contiguous(const SteppingSequence& seq) {
    if (seq.moves.empty()) {
        throw std::domain_error("is_strongly_contiguous: empty sequence has no endpoints");
    }
    return is_contiguous(seq) && seq.moves.front() == seq.m - 1 && seq.moves.back() == 1;
}

bool is_cyclic_gray(const GrayOrdering& ordering) {
    const std::size_t n = ordering.words.size();
    if (n == 0) return false;
    for (std::size_t p = 0; p < n; ++p) {
        const Mask next = ordering.words[(p + 1) % n];
        if (std::popcount(ordering.words[p] ^ next) != 1) return false;
    }
    return true;
}

KSubsetOrdering restrict_to_k(const SteppingSequence& seq, int k, int verify_limit) {
    if (k < 0 || k > seq.m) {
        throw std::domain_error("restrict_to_k: k must be in [0, m]");
    }
    const GrayOrdering ordering = to_ordering(seq, verify_limit);
    KSubsetOrdering out;
    out.m = seq.m;
    out.k = k;
    for (Mask w : ordering.words) {
        if (std::popcount(w) == k) out.sets.push_back(w);
    }
    return out;
}

GrayOrdering brgc(int m) {
    if (m < 1 || m > 20) {
        throw std::domain_error("brgc: m must be in [1, 20]");
    }
    GrayOrdering ordering;
    ordering.m = m;
    const std::uint64_t n = std::uint64_t{1} << m;
    ordering.words.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) ordering.words.push_back(i ^ (i >> 1));
    return ordering;
}

std::optional<NestingViolation> nesting_violation(const GrayOrdering& ordering) {
    std::vector<Mask> repr(static_cast<std::size_t>(ordering.m) + 1, 0);
    std::vector<bool> have(static_cast<std::size_t>(ordering.m) + 1, false);

    auto family = [&]() {
        std::vector<Mask> out;
        for (int c = 0; c <= ordering.m; ++c) {
            if (have[c]) out.push_back(repr[c]);
        }
        return out;
    };

    for (std::size_t p = 0; p < ordering.words.size(); ++p) {
        const Mask w = ordering.words[p];
        const int c = std::popcount(w);
        repr[c] = w;
        have[c] = true;
        // only the pairs adjacent to cardinality c can have changed
        for (int below = c - 1; below >= 0; --below) {
            if (!have[below]) continue;
            if ((repr[below] & ~w) != 0) return NestingViolation{p, w, family()};
            break;
        }
        for (int above = c + 1; above <= ordering.m; ++above) {
            if (!have[above]) continue;
            if ((w & ~repr[above]) != 0) return NestingViolation{p, w, family()};
            break;
        }
    }
    return std::nullopt;
}

const SteppingSequence& a6() {
    static const SteppingSequence seq{
        6, {5, 4, 5, 4, 3, 2, 3, 4, 5, 4, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 4, 5, 4, 3,
            4, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 4, 5, 4, 3, 4, 3, 2, 3, 4, 3, 2, 1, 2,
            3, 4, 3, 2, 1, 2, 1}};
    return seq;
}

} // namespace stepseq
