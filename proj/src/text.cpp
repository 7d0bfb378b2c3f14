#include "stepseq/text.hpp"

#include <charconv>
#include <sstream>

namespace stepseq {

std::string format_moves(const SteppingSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(seq.moves[i]);
    }
    return out;
}

SteppingSequence parse_moves(std::string_view line, int m) {
    SteppingSequence seq{m, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
            ++pos;
            continue;
        }
        int value = 0;
        const auto [next, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc{} || next == line.data() + pos) {
            throw ParseError("parse_moves: expected a decimal move index at column " +
                             std::to_string(pos + 1));
        }
        seq.moves.push_back(value);
        pos = static_cast<std::size_t>(next - line.data());
        if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            throw ParseError("parse_moves: unexpected character at column " +
                             std::to_string(pos + 1));
        }
    }
    return seq;
}

std::string format_labels(const DifferenceSequence& chain, int label_base) {
    std::string out;
    for (int i = 1; i <= chain.m(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(chain.label(i) + label_base);
    }
    return out;
}

std::string format_mask_binary(Mask bits, int m) {
    std::string out(static_cast<std::size_t>(m), '0');
    for (int i = 0; i < m; ++i) {
        if ((bits >> i) & 1) out[static_cast<std::size_t>(m - 1 - i)] = '1';
    }
    return out;
}

std::string format_mask_decimal(Mask bits) {
    return std::to_string(bits);
}

std::string format_subset(Mask bits, int label_base) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < kMaxWidth; ++i) {
        if ((bits >> i) & 1) {
            if (!first) out += ',';
            out += std::to_string(i + label_base);
            first = false;
        }
    }
    out += '}';
    return out;
}

std::string format_ordering(const GrayOrdering& ordering, bool binary) {
    std::ostringstream out;
    for (Mask w : ordering.words) {
        if (binary) {
            out << format_mask_binary(w, ordering.m) << '\n';
        } else {
            out << w << '\n';
        }
    }
    return out.str();
}

std::string format_ksubsets(const KSubsetOrdering& ordering) {
    std::ostringstream out;
    for (Mask s : ordering.sets) out << format_subset(s) << '\n';
    return out.str();
}

} // namespace stepseq
