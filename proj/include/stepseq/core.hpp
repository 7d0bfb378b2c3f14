#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Chains of nested sets S_0 < S_1 < ... < S_m with |S_i| = i, the moves that
// alter one S_i at a time, and the stepping sequences that walk every subset
// of the ground set exactly once.
//
// The ground set is always {0,...,m-1}; a subset is encoded as the mask
// sum_{i in S} 2^i. Any other labelling is a display concern.

namespace stepseq {

using Mask = std::uint64_t;

inline constexpr int kMaxWidth = 64;           // a subset mask must fit one word
inline constexpr int kDefaultVerifyLimit = 28; // verify allocates a 2^m-bit table

/// Thrown when an operation would exceed a configured resource limit.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of set bits.
int hamming_weight(std::uint64_t c) noexcept;

/// 2-adic valuation: largest v with 2^v dividing c. Throws std::domain_error
/// for c = 0, where the valuation is undefined.
int v2(std::uint64_t c);

/// Mask of the i lowest ground-set elements {0,...,i-1}.
constexpr Mask low_mask(int i) noexcept {
    return i >= 64 ? ~Mask{0} : (Mask{1} << i) - 1;
}

/// A candidate walk: move index moves[k] alters S_{moves[k]} at step k+1.
/// Indices are 1-based, matching the serialized text format.
struct SteppingSequence {
    int m = 0;
    std::vector<int> moves;

    friend bool operator==(const SteppingSequence&, const SteppingSequence&) = default;
    friend auto operator<=>(const SteppingSequence&, const SteppingSequence&) = default;
};

/// Structural well-formedness: every move in [1, m-1], no two consecutive
/// moves equal. Says nothing about the walk visiting subsets exactly once.
bool is_well_formed(const SteppingSequence& seq) noexcept;

/// Expected length of a verified stepping sequence: 2^m - m - 1.
std::uint64_t stepping_length(int m) noexcept;

/// The chain state <q_1,...,q_m>, where q_i is the unique element of
/// S_i \ S_{i-1}. Immutable value type; apply_move returns a fresh chain.
class DifferenceSequence {
public:
    /// Identity chain q_i = i-1, so S_i = {0,...,i-1}. Requires 1 <= m <= 64.
    explicit DifferenceSequence(int m);

    int m() const noexcept { return m_; }

    /// q_i for 1 <= i <= m.
    int label(int i) const;

    /// S_i as a mask, 0 <= i <= m.
    Mask subset(int i) const;

    /// <q_1,...,q_m>.
    std::vector<int> labels() const;

    friend bool operator==(const DifferenceSequence& a, const DifferenceSequence& b) {
        return a.m_ == b.m_ && a.q_ == b.q_;
    }

private:
    friend class ChainSimulator;
    friend std::pair<DifferenceSequence, Mask> apply_move(const DifferenceSequence&, int);
    int m_ = 0;
    std::array<std::uint8_t, kMaxWidth> q_{};
};

/// Identity chain for 2 <= m <= 64 (throws std::domain_error otherwise).
DifferenceSequence new_chain(int m);

/// Transpose q_i and q_{i+1}, 1 <= i <= m-1. Returns the new chain and the
/// replacement set S_i = S_{i-1} + {old q_{i+1}}. A second application with
/// the same i restores the original chain.
std::pair<DifferenceSequence, Mask> apply_move(const DifferenceSequence& chain, int i);

/// S_i of the given chain, 0 <= i <= m.
Mask subset_at(const DifferenceSequence& chain, int i);

/// Mutable walk engine shared by verify, the greedy generators and the
/// exhaustive search. Maintains all masks S_0..S_m incrementally, so apply
/// and peek are O(1). apply is an involution per index.
class ChainSimulator {
public:
    explicit ChainSimulator(int m);
    explicit ChainSimulator(const DifferenceSequence& chain);

    int m() const noexcept { return m_; }

    /// Transpose q_i and q_{i+1}; returns the new S_i.
    Mask apply(int i) noexcept {
        std::swap(q_[i - 1], q_[i]);
        mask_[i] = mask_[i - 1] | (Mask{1} << q_[i - 1]);
        return mask_[i];
    }

    /// The S_i that apply(i) would produce, without applying.
    Mask peek(int i) const noexcept {
        return mask_[i - 1] | (Mask{1} << q_[i]);
    }

    Mask subset(int i) const noexcept { return mask_[i]; }
    int label(int i) const noexcept { return q_[i - 1]; }

    DifferenceSequence chain() const;

private:
    int m_ = 0;
    std::array<std::uint8_t, kMaxWidth> q_{};
    std::array<Mask, kMaxWidth + 1> mask_{};
};

enum class FailureReason {
    RepeatedSubset,
    InitialSubsetRevisited,
    WrongLength,
    IndexOutOfRange,
    ConsecutiveEqualMoves,
};

std::string to_string(FailureReason reason);

/// Outcome of simulating a candidate stepping sequence. On failure reports
/// the earliest violated condition; failure_step is the 1-based move index
/// (absent for WrongLength, which is only known once the walk ends).
struct VerificationReport {
    bool valid = false;
    std::optional<std::uint64_t> failure_step;
    std::optional<FailureReason> reason;
    std::optional<Mask> repeated_subset;
};

/// Simulate seq from the identity chain and check that every subset of the
/// ground set other than the initial S_i is produced exactly once. Allocates
/// a 2^m-bit visited table; m above the limit raises ResourceLimitError.
VerificationReport verify(const SteppingSequence& seq, int limit = kDefaultVerifyLimit);

/// Occurrence counts of each move index: result[i-1] = multiplicity of i.
/// For a verified stepping sequence this equals C(m,i) - 1.
std::vector<std::uint64_t> occurrence_profile(const SteppingSequence& seq);

} // namespace stepseq
