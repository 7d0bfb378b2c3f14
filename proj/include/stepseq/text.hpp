#pragma once

#include <string>
#include <string_view>

#include "stepseq/core.hpp"
#include "stepseq/graycode.hpp"

// Text formats shared by the CLI, the file formats and the tests:
//   stepping sequence   "3 2 3 2 1 2 3 2 1 2 1"     (one per line)
//   difference sequence "0,1,2,3"                    (comma-separated labels)
//   mask, binary        "1011"                       (m digits, high bit first)
//   subset              "{0,1,3}"                    (sorted elements)

namespace stepseq {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_moves(const SteppingSequence& seq);

/// Parse one line of space-separated move indices. An empty (or blank) line
/// is the empty sequence. Range checking is left to verify.
SteppingSequence parse_moves(std::string_view line, int m);

/// Labels joined by commas; label_base shifts the displayed labels (ground
/// set elements are 0-based internally, some tables display them 1-based).
std::string format_labels(const DifferenceSequence& chain, int label_base = 0);

/// Exactly m binary digits, highest ground-set element leftmost.
std::string format_mask_binary(Mask bits, int m);

std::string format_mask_decimal(Mask bits);

/// "{0,2,3}" with elements ascending; "{}" for the empty set.
std::string format_subset(Mask bits, int label_base = 0);

std::string format_ordering(const GrayOrdering& ordering, bool binary);

std::string format_ksubsets(const KSubsetOrdering& ordering);

} // namespace stepseq
