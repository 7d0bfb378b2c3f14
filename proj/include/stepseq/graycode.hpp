#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stepseq/core.hpp"

// From stepping sequences to Gray codes: the induced ordering of all m-bit
// words, cyclicity and contiguity predicates, the induced k-subset orderings,
// and the binary reflected Gray code with its nesting counterexample.

namespace stepseq {

/// An ordering of all 2^m masks, each exactly once.
struct GrayOrdering {
    int m = 0;
    std::vector<Mask> words;

    friend bool operator==(const GrayOrdering&, const GrayOrdering&) = default;
};

/// An ordering of all C(m,k) weight-k masks, each exactly once.
struct KSubsetOrdering {
    int m = 0;
    int k = 0;
    std::vector<Mask> sets;

    friend bool operator==(const KSubsetOrdering&, const KSubsetOrdering&) = default;
};

/// The subset walk of a verified stepping sequence: the initial S_0,...,S_m
/// followed by each newly produced subset in move order; 2^m distinct words.
/// Throws std::domain_error if seq does not verify.
GrayOrdering to_ordering(const SteppingSequence& seq, int verify_limit = kDefaultVerifyLimit);

/// Adjacent moves differ by exactly 1 throughout (vacuous for length <= 1).
bool is_contiguous(const SteppingSequence& seq) noexcept;

/// Contiguous, first move m-1, last move 1. Throws std::domain_error for an
/// empty sequence (no first or last move).
bool is_strongly_contiguous(const SteppingSequence& seq);

/// Every consecutive pair, including last-to-first, differs in exactly one bit.
bool is_cyclic_gray(const GrayOrdering& ordering);

/// Weight-k subsequence of to_ordering(seq); consecutive sets share exactly
/// k-1 elements.
KSubsetOrdering restrict_to_k(const SteppingSequence& seq, int k,
                              int verify_limit = kDefaultVerifyLimit);

/// Binary reflected Gray code on m-bit words: word i is i ^ (i >> 1), which
/// realizes the reflect-and-prefix recursion with the new bit on top.
GrayOrdering brgc(int m);

/// First position whose word breaks the chain property of the most recent
/// word of each cardinality, with the offending family (sorted by weight).
struct NestingViolation {
    std::size_t position = 0;
    Mask word = 0;
    std::vector<Mask> family;
};

/// Scan the ordering, keeping the latest word seen of each cardinality, and
/// report the first position where those representatives stop forming a
/// chain under inclusion. A stepping-sequence ordering never violates this;
/// the reflected Gray code does.
std::optional<NestingViolation> nesting_violation(const GrayOrdering& ordering);

/// The one strongly contiguous stepping sequence for m = 6 that is not the
/// canonical one.
const SteppingSequence& a6();

} // namespace stepseq
