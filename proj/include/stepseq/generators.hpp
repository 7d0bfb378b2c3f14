#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "stepseq/core.hpp"

// Four constructions of the canonical stepping sequence R_m (recursive,
// greedy, and two constant-memory loop generators), the humble variant, and
// the two combinators that build stepping sequences for m out of stepping
// sequences for m-1.

namespace stepseq {

inline constexpr int kDefaultMaterializeLimit = 30; // output has 2^m - m - 1 entries
inline constexpr int kDefaultGreedyLimit = 24;      // greedy keeps a 2^m-bit seen table

/// R_m by the defining recursion: R_2 = [1],
/// R_m = (R_{m-1} + 1) ++ [1,...,m-1] ++ R_{m-1}.
SteppingSequence recursive_r(int m, int limit = kDefaultMaterializeLimit);

/// Always alter the largest-cardinality set whose replacement is unseen.
/// Produces exactly R_m.
SteppingSequence greedy(int m, int limit = kDefaultGreedyLimit);

/// Always alter the smallest-cardinality set whose replacement is unseen.
/// Produces the reverse of the greedy sequence.
SteppingSequence humble(int m, int limit = kDefaultGreedyLimit);

/// Incremental generator of R_m: pull moves with next() until exhaustion.
/// Working state is a fixed handful of words, independent of m; state_words
/// reports the footprint so tests can pin it down.
class MoveStream {
public:
    virtual ~MoveStream() = default;

    /// Next move index, or nullopt once 2^m - m - 1 moves have been emitted.
    virtual std::optional<int> next() = 0;

    /// Live generator state in 64-bit words (no heap behind it).
    virtual std::size_t state_words() const noexcept = 0;

    int m() const noexcept { return m_; }
    std::uint64_t emitted() const noexcept { return emitted_; }
    std::uint64_t total_expected() const noexcept { return stepping_length(m_); }

protected:
    explicit MoveStream(int m);
    int m_;
    std::uint64_t emitted_ = 0;
};

/// R_m as one block per counter value c = 1 ... 2^{m-1}-1: with v = v2(c),
/// h = hamming_weight(c), d = m - v - h, the block is [d, d+1, ..., d+v].
class ForCStream final : public MoveStream {
public:
    explicit ForCStream(int m);
    std::optional<int> next() override;
    std::size_t state_words() const noexcept override;

private:
    std::uint64_t c_ = 0;
    std::uint64_t c_last_ = 0;
    int pos_ = 1;
    int end_ = 0;
};

/// R_m as [m-1] followed, for j = 1 ... 2^{m-2}-1 with v = v2(j), by the run
/// [t, t+1, ..., t+v+1] and the single move t+v, after which t += v-1.
/// After a full drain t has returned to 0.
class ForJStream final : public MoveStream {
public:
    explicit ForJStream(int m);
    std::optional<int> next() override;
    std::size_t state_words() const noexcept override;

    /// Internal cursor t; 0 after exhaustion.
    int t() const noexcept { return t_; }

private:
    std::uint64_t j_ = 0;
    std::uint64_t j_last_ = 0;
    int t_ = 0;
    int pos_ = 1;
    int run_end_ = 0;
    int tail_ = -1; // pending single move after the run, -1 when none
};

std::unique_ptr<MoveStream> stream_for_c(int m);
std::unique_ptr<MoveStream> stream_for_j(int m);

/// Collect a full drain into a SteppingSequence (materialization-limited).
SteppingSequence drain(MoveStream& stream, int limit = kDefaultMaterializeLimit);

/// (A+1) ++ [1,...,m-1] ++ B for stepping sequences A, B with A.m = B.m = m-1.
/// With strict = true both inputs are verified first.
SteppingSequence combine_first(const SteppingSequence& a, const SteppingSequence& b,
                               bool strict = false);

/// A ++ [m-1,...,1] ++ (B+1), the complement-mirrored combinator.
SteppingSequence combine_second(const SteppingSequence& a, const SteppingSequence& b,
                                bool strict = false);

} // namespace stepseq
