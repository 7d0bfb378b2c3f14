#pragma once

#include <cstddef>
#include <vector>

#include "stepseq/core.hpp"

// The symmetries acting on stepping sequences: entry-wise complement,
// reversal, the single-transposition commutations, and closure of a seed set
// under any combination of the three.

namespace stepseq {

inline constexpr std::size_t kDefaultOrbitCap = std::size_t{1} << 20;

/// Entry-wise i -> m - i. Maps stepping sequences to stepping sequences
/// (walking the complemented chain); an involution.
SteppingSequence complement(const SteppingSequence& seq);

/// Moves in reverse order. Maps stepping sequences to stepping sequences
/// (running the walk backwards); an involution.
SteppingSequence reverse(const SteppingSequence& seq);

/// One output per adjacent pair of moves differing by at least 2, with that
/// pair transposed. Swapping such a pair only exchanges the order in which
/// the two sets are produced, so validity is preserved.
std::vector<SteppingSequence> commutations(const SteppingSequence& seq);

struct OrbitOps {
    bool reverse = true;
    bool complement = true;
    bool commutation = true;
};

/// Least set containing the seeds and closed under the selected operations,
/// returned in lexicographic order of move lists. Raises ResourceLimitError
/// if the closure grows past max_size.
std::vector<SteppingSequence> orbit_closure(const std::vector<SteppingSequence>& seeds,
                                            OrbitOps ops,
                                            std::size_t max_size = kDefaultOrbitCap);

} // namespace stepseq
