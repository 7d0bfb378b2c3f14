#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "stepseq/core.hpp"

// Exhaustive backtracking over move choices with bitmask pruning: counts or
// collects every stepping sequence for a given m, optionally restricted to
// the contiguous / strongly contiguous families.

namespace stepseq {

enum class Filter {
    All,                // every stepping sequence
    Contiguous,         // adjacent moves differ by exactly 1
    StronglyContiguous, // contiguous, first move m-1, last move 1
};

enum class Mode { Count, Collect };

inline constexpr int kDefaultCollectLimit = 6;
inline constexpr int kDefaultAllLimit = 5;        // unrestricted search
inline constexpr int kDefaultContiguousLimit = 6; // prune-heavy filtered search

struct SearchConfig {
    int m = 2;
    Filter filter = Filter::All;
    Mode mode = Mode::Count;
    /// Abort with BudgetExhaustedError after this many applied moves. Setting
    /// a budget also unlocks m beyond the per-filter feasibility defaults.
    std::optional<std::uint64_t> node_budget;
    /// Worker threads, split over the first-level move choice. Counts and
    /// collected output are schedule-independent. Ignored when a budget is
    /// set (budgeted runs are single-threaded).
    int threads = 1;
    int collect_limit = kDefaultCollectLimit;
};

struct SearchResult {
    std::uint64_t count = 0;
    std::uint64_t nodes = 0; // moves applied, pruned branches included
    std::vector<SteppingSequence> sequences; // Collect mode only, lexicographic
};

/// Search aborted by the node budget; carries what was explored so far.
class BudgetExhaustedError : public std::runtime_error {
public:
    BudgetExhaustedError(std::uint64_t nodes, std::uint64_t partial_count);
    std::uint64_t nodes_explored() const noexcept { return nodes_; }
    std::uint64_t partial_count() const noexcept { return partial_count_; }

private:
    std::uint64_t nodes_ = 0;
    std::uint64_t partial_count_ = 0;
};

/// Depth-first enumeration per config. A branch is pruned as soon as its
/// next move would regenerate a visited or initial subset, so every leaf at
/// full depth is a stepping sequence.
SearchResult enumerate(const SearchConfig& config);

/// Single-threaded enumeration that hands each found sequence's moves to the
/// visitor, in lexicographic order, without materializing the result set.
/// Returns the count.
std::uint64_t enumerate_visit(const SearchConfig& config,
                              const std::function<void(std::span<const int>)>& visit);

/// The m=4 population: every stepping sequence, the combinator products, the
/// two symmetry families, and the self-symmetric members.
struct CensusM4 {
    std::uint64_t total = 0;
    std::vector<SteppingSequence> all;
    std::vector<SteppingSequence> combinator_products;   // both combinators over m=3 pairs
    std::vector<SteppingSequence> product_family;        // products closed under commutation
    std::vector<SteppingSequence> remaining_family;      // closure of the two non-product seeds
    std::uint64_t reverse_equals_complement = 0;
    bool families_disjoint = false;
    bool families_cover_all = false;
};

CensusM4 census_m4();

/// True iff every contiguous stepping sequence for m satisfies the endpoint
/// parity laws: for even m, first and last moves odd; for any m, the sequence
/// or its reverse starts congruent to m-1 and ends congruent to 1 (mod 2).
bool parity_check(int m);

} // namespace stepseq
