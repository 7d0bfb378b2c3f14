#include "stepseq/transforms.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace stepseq {

SteppingSequence complement(const SteppingSequence& seq) {
    SteppingSequence out{seq.m, seq.moves};
    for (int& mv : out.moves) mv = seq.m - mv;
    return out;
}

SteppingSequence reverse(const SteppingSequence& seq) {
    SteppingSequence out{seq.m, seq.moves};
    std::reverse(out.moves.begin(), out.moves.end());
    return out;
}

std::vector<SteppingSequence> commutations(const SteppingSequence& seq) {
    std::vector<SteppingSequence> out;
    for (std::size_t p = 0; p + 1 < seq.moves.size(); ++p) {
        if (std::abs(seq.moves[p] - seq.moves[p + 1]) >= 2) {
            SteppingSequence swapped = seq;
            std::swap(swapped.moves[p], swapped.moves[p + 1]);
            out.push_back(std::move(swapped));
        }
    }
    return out;
}

std::vector<SteppingSequence> orbit_closure(const std::vector<SteppingSequence>& seeds,
                                            OrbitOps ops, std::size_t max_size) {
    if (seeds.empty()) return {};
    const int m = seeds.front().m;
    for (const auto& s : seeds) {
        if (s.m != m) {
            throw std::domain_error("orbit_closure: seeds must share the same m");
        }
    }

    std::set<std::vector<int>> visited;
    std::deque<std::vector<int>> frontier;
    auto admit = [&](std::vector<int> moves) {
        if (visited.insert(moves).second) {
            if (visited.size() > max_size) {
                throw ResourceLimitError("orbit_closure: orbit exceeds the size cap (" +
                                         std::to_string(max_size) + ")");
            }
            frontier.push_back(std::move(moves));
        }
    };

    for (const auto& s : seeds) admit(s.moves);
    while (!frontier.empty()) {
        SteppingSequence cur{m, std::move(frontier.front())};
        frontier.pop_front();
        if (ops.reverse) admit(reverse(cur).moves);
        if (ops.complement) admit(complement(cur).moves);
        if (ops.commutation) {
            for (auto& neighbor : commutations(cur)) admit(std::move(neighbor.moves));
        }
    }

    std::vector<SteppingSequence> out;
    out.reserve(visited.size());
    for (const auto& moves : visited) out.push_back({m, moves});
    return out;
}

} // namespace stepseq
