#include "stepseq/generators.hpp"

#include <bit>

namespace stepseq {

namespace {

void check_generation_range(const char* who, int m, int limit) {
    if (m < 2) {
        throw std::domain_error(std::string(who) + ": m must be at least 2");
    }
    if (m > kMaxWidth) {
        throw std::domain_error(std::string(who) + ": m must be at most 64");
    }
    if (m > limit) {
        throw ResourceLimitError(std::string(who) + ": m exceeds the limit (" +
                                 std::to_string(limit) + ")");
    }
}

// flat 2^m-bit seen table, initial sets pre-marked
struct SeenTable {
    explicit SeenTable(int m) : bits((std::size_t{1} << m) / 64 + 1, 0) {
        for (int i = 0; i <= m; ++i) mark(low_mask(i));
    }
    void mark(Mask s) { bits[s >> 6] |= std::uint64_t{1} << (s & 63); }
    bool seen(Mask s) const { return (bits[s >> 6] >> (s & 63)) & 1; }
    std::vector<std::uint64_t> bits;
};

} // namespace

SteppingSequence recursive_r(int m, int limit) {
    check_generation_range("recursive_r", m, limit);
    std::vector<int> cur = {1}; // R_2
    for (int k = 3; k <= m; ++k) {
        std::vector<int> next;
        next.reserve(static_cast<std::size_t>(stepping_length(k)));
        for (int x : cur) next.push_back(x + 1);
        for (int i = 1; i <= k - 1; ++i) next.push_back(i);
        next.insert(next.end(), cur.begin(), cur.end());
        cur = std::move(next);
    }
    return {m, std::move(cur)};
}

namespace {

// Shared body of greedy and humble: scan candidate indices in `descending`
// (greedy, max J) or ascending (humble, min J) order and take the first whose
// replacement set is unseen.
SteppingSequence greedy_walk(const char* who, int m, int limit, bool descending) {
    check_generation_range(who, m, limit);
    ChainSimulator sim(m);
    SeenTable seen(m);
    std::vector<int> moves;
    moves.reserve(static_cast<std::size_t>(stepping_length(m)));
    for (;;) {
        int chosen = 0;
        const int first = descending ? m - 1 : 1;
        const int step = descending ? -1 : 1;
        for (int i = first; i >= 1 && i <= m - 1; i += step) {
            if (!seen.seen(sim.peek(i))) {
                chosen = i;
                break;
            }
        }
        if (chosen == 0) break;
        seen.mark(sim.apply(chosen));
        moves.push_back(chosen);
    }
    return {m, std::move(moves)};
}

} // namespace

SteppingSequence greedy(int m, int limit) {
    return greedy_walk("greedy", m, limit, /*descending=*/true);
}

SteppingSequence humble(int m, int limit) {
    return greedy_walk("humble", m, limit, /*descending=*/false);
}

MoveStream::MoveStream(int m) : m_(m) {
    if (m < 2 || m > kMaxWidth) {
        throw std::domain_error("MoveStream: m must be in [2, 64]");
    }
}

ForCStream::ForCStream(int m)
    : MoveStream(m), c_last_((std::uint64_t{1} << (m - 1)) - 1) {}

std::optional<int> ForCStream::next() {
    if (pos_ > end_) {
        if (c_ >= c_last_) return std::nullopt;
        ++c_;
        const int v = std::countr_zero(c_);
        const int h = std::popcount(c_);
        pos_ = m_ - v - h;
        end_ = pos_ + v;
    }
    ++emitted_;
    return pos_++;
}

std::size_t ForCStream::state_words() const noexcept {
    return (sizeof(ForCStream) + 7) / 8;
}

ForJStream::ForJStream(int m)
    : MoveStream(m),
      j_last_((std::uint64_t{1} << (m - 2)) - 1),
      t_(m - 2),
      pos_(m - 1),
      run_end_(m - 1) {}

std::optional<int> ForJStream::next() {
    if (pos_ <= run_end_) {
        ++emitted_;
        return pos_++;
    }
    if (tail_ >= 0) {
        const int mv = tail_;
        tail_ = -1;
        ++emitted_;
        return mv;
    }
    if (j_ >= j_last_) return std::nullopt;
    ++j_;
    const int v = std::countr_zero(j_);
    pos_ = t_;
    run_end_ = t_ + v + 1;
    tail_ = t_ + v;
    t_ += v - 1;
    ++emitted_;
    return pos_++;
}

std::size_t ForJStream::state_words() const noexcept {
    return (sizeof(ForJStream) + 7) / 8;
}

std::unique_ptr<MoveStream> stream_for_c(int m) {
    return std::make_unique<ForCStream>(m);
}

std::unique_ptr<MoveStream> stream_for_j(int m) {
    return std::make_unique<ForJStream>(m);
}

SteppingSequence drain(MoveStream& stream, int limit) {
    if (stream.m() > limit) {
        throw ResourceLimitError("drain: m exceeds the materialization limit (" +
                                 std::to_string(limit) + ")");
    }
    std::vector<int> moves;
    moves.reserve(static_cast<std::size_t>(stream.total_expected()));
    while (auto mv = stream.next()) moves.push_back(*mv);
    return {stream.m(), std::move(moves)};
}

namespace {

void check_combinable(const char* who, const SteppingSequence& a,
                      const SteppingSequence& b, bool strict) {
    if (a.m != b.m) {
        throw std::domain_error(std::string(who) + ": operands must share the same m");
    }
    if (a.m < 1 || a.m >= kMaxWidth) {
        throw std::domain_error(std::string(who) + ": operand m must be in [1, 63]");
    }
    if (strict) {
        if (!verify(a).valid || !verify(b).valid) {
            throw std::domain_error(std::string(who) +
                                    ": strict mode requires verified stepping sequences");
        }
    }
}

} // namespace

SteppingSequence combine_first(const SteppingSequence& a, const SteppingSequence& b,
                               bool strict) {
    check_combinable("combine_first", a, b, strict);
    const int m = a.m + 1;
    std::vector<int> moves;
    moves.reserve(a.moves.size() + b.moves.size() + static_cast<std::size_t>(m) - 1);
    for (int x : a.moves) moves.push_back(x + 1);
    for (int i = 1; i <= m - 1; ++i) moves.push_back(i);
    moves.insert(moves.end(), b.moves.begin(), b.moves.end());
    return {m, std::move(moves)};
}

SteppingSequence combine_second(const SteppingSequence& a, const SteppingSequence& b,
                                bool strict) {
    check_combinable("combine_second", a, b, strict);
    const int m = a.m + 1;
    std::vector<int> moves;
    moves.reserve(a.moves.size() + b.moves.size() + static_cast<std::size_t>(m) - 1);
    moves.insert(moves.end(), a.moves.begin(), a.moves.end());
    for (int i = m - 1; i >= 1; --i) moves.push_back(i);
    for (int x : b.moves) moves.push_back(x + 1);
    return {m, std::move(moves)};
}

} // namespace stepseq
