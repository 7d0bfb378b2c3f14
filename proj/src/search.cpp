#include "stepseq/search.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <thread>

#include "stepseq/generators.hpp"
#include "stepseq/transforms.hpp"

namespace stepseq {

BudgetExhaustedError::BudgetExhaustedError(std::uint64_t nodes, std::uint64_t partial_count)
    : std::runtime_error("search budget exhausted after " + std::to_string(nodes) +
                         " nodes (" + std::to_string(partial_count) + " sequences so far)"),
      nodes_(nodes),
      partial_count_(partial_count) {}

namespace {

int feasibility_limit(Filter filter) {
    return filter == Filter::All ? kDefaultAllLimit : kDefaultContiguousLimit;
}

void check_config(const SearchConfig& config) {
    if (config.m < 2 || config.m > kMaxWidth) {
        throw std::domain_error("enumerate: m must be in [2, 64]");
    }
    if (config.m > kDefaultVerifyLimit) {
        throw std::domain_error("enumerate: the visited table needs 2^m bits; m is capped at " +
                                std::to_string(kDefaultVerifyLimit));
    }
    if (config.mode == Mode::Collect && config.m > config.collect_limit) {
        throw std::domain_error("enumerate: Collect mode is capped at m <= " +
                                std::to_string(config.collect_limit));
    }
    if (config.m > feasibility_limit(config.filter) && !config.node_budget) {
        throw ResourceLimitError(
            "enumerate: m exceeds the feasibility default for this filter; "
            "set a node budget to probe further");
    }
    if (config.threads < 1) {
        throw std::domain_error("enumerate: threads must be positive");
    }
}

// One thread-confined search state: chain simulator, visited bitmap, stack.
struct Searcher {
    Searcher(int m, Filter filter, std::optional<std::uint64_t> budget,
             const std::function<void(std::span<const int>)>* visit)
        : m(m),
          filter(filter),
          target(stepping_length(m)),
          sim(m),
          visited((std::size_t{1} << m) / 64 + 1, 0),
          budget(budget),
          visit(visit) {
        for (int i = 0; i <= m; ++i) mark(low_mask(i));
        stack.reserve(static_cast<std::size_t>(target));
    }

    int m;
    Filter filter;
    std::uint64_t target;
    ChainSimulator sim;
    std::vector<std::uint64_t> visited;
    std::vector<int> stack;
    std::optional<std::uint64_t> budget;
    const std::function<void(std::span<const int>)>* visit;
    std::uint64_t nodes = 0;
    std::uint64_t count = 0;

    void mark(Mask s) { visited[s >> 6] ^= std::uint64_t{1} << (s & 63); }
    bool seen(Mask s) const { return (visited[s >> 6] >> (s & 63)) & 1; }

    void descend(int mv) {
        ++nodes;
        if (budget && nodes > *budget) throw BudgetExhaustedError(nodes, count);
        const Mask produced = sim.apply(mv);
        mark(produced);
        stack.push_back(mv);
        if (stack.size() == target) {
            if (filter != Filter::StronglyContiguous || mv == 1) {
                ++count;
                if (visit) (*visit)(std::span<const int>(stack));
            }
        } else {
            expand(mv);
        }
        stack.pop_back();
        sim.apply(mv);  // undo: transposition is an involution
        mark(produced); // clear the visited bit
    }

    void expand(int prev) {
        if (filter == Filter::All) {
            for (int i = 1; i <= m - 1; ++i) {
                if (i != prev && !seen(sim.peek(i))) descend(i);
            }
        } else {
            if (prev > 1 && !seen(sim.peek(prev - 1))) descend(prev - 1);
            if (prev < m - 1 && !seen(sim.peek(prev + 1))) descend(prev + 1);
        }
    }

    // run the whole search from the initial chain
    void run() {
        if (filter == Filter::StronglyContiguous) {
            descend(m - 1);
        } else {
            for (int i = 1; i <= m - 1; ++i) descend(i); // all first moves are fresh
        }
    }
};

std::vector<int> first_moves(int m, Filter filter) {
    if (filter == Filter::StronglyContiguous) return {m - 1};
    std::vector<int> moves;
    for (int i = 1; i <= m - 1; ++i) moves.push_back(i);
    return moves;
}

} // namespace

std::uint64_t enumerate_visit(const SearchConfig& config,
                              const std::function<void(std::span<const int>)>& visit) {
    check_config(config);
    Searcher searcher(config.m, config.filter, config.node_budget, &visit);
    searcher.run();
    return searcher.count;
}

SearchResult enumerate(const SearchConfig& config) {
    check_config(config);

    const bool collect = config.mode == Mode::Collect;
    const int threads = config.node_budget ? 1 : config.threads;

    if (threads == 1) {
        SearchResult result;
        std::function<void(std::span<const int>)> collector =
            [&](std::span<const int> moves) {
                result.sequences.push_back({config.m, {moves.begin(), moves.end()}});
            };
        Searcher searcher(config.m, config.filter, config.node_budget,
                          collect ? &collector : nullptr);
        searcher.run();
        result.count = searcher.count;
        result.nodes = searcher.nodes;
        return result;
    }

    // Split on the first move: one independent subtree per first-level choice,
    // drained by a fixed pool and merged back in choice order.
    const std::vector<int> roots = first_moves(config.m, config.filter);
    struct Slot {
        std::uint64_t count = 0;
        std::uint64_t nodes = 0;
        std::vector<SteppingSequence> sequences;
    };
    std::vector<Slot> slots(roots.size());
    std::vector<std::exception_ptr> errors(roots.size());
    std::atomic<std::size_t> cursor{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = cursor.fetch_add(1);
            if (idx >= roots.size()) return;
            try {
                Slot& slot = slots[idx];
                std::function<void(std::span<const int>)> collector =
                    [&](std::span<const int> moves) {
                        slot.sequences.push_back({config.m, {moves.begin(), moves.end()}});
                    };
                Searcher searcher(config.m, config.filter, std::nullopt,
                                  collect ? &collector : nullptr);
                searcher.descend(roots[idx]);
                slot.count = searcher.count;
                slot.nodes = searcher.nodes;
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    const std::size_t pool_size =
        std::min<std::size_t>(static_cast<std::size_t>(threads), roots.size());
    pool.reserve(pool_size);
    for (std::size_t i = 0; i < pool_size; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }

    SearchResult result;
    for (Slot& slot : slots) {
        result.count += slot.count;
        result.nodes += slot.nodes;
        result.sequences.insert(result.sequences.end(),
                                std::make_move_iterator(slot.sequences.begin()),
                                std::make_move_iterator(slot.sequences.end()));
    }
    return result;
}

CensusM4 census_m4() {
    CensusM4 census;

    SearchConfig config;
    config.m = 4;
    config.mode = Mode::Collect;
    SearchResult found = enumerate(config);
    census.all = std::move(found.sequences);
    census.total = found.count;

    // both combinators over every ordered pair of m=3 stepping sequences
    SearchConfig base;
    base.m = 3;
    base.mode = Mode::Collect;
    const std::vector<SteppingSequence> small = enumerate(base).sequences;
    std::vector<SteppingSequence> products;
    for (const auto& a : small) {
        for (const auto& b : small) {
            products.push_back(combine_first(a, b));
            products.push_back(combine_second(a, b));
        }
    }
    std::sort(products.begin(), products.end());
    products.erase(std::unique(products.begin(), products.end()), products.end());
    census.combinator_products = std::move(products);

    census.product_family = orbit_closure(
        census.combinator_products,
        OrbitOps{.reverse = false, .complement = false, .commutation = true});

    const std::vector<SteppingSequence> remaining_seeds = {
        {4, {2, 1, 2, 3, 2, 3, 1, 2, 3, 2, 1}},
        {4, {2, 3, 1, 2, 3, 2, 1, 2, 3, 1, 2}},
    };
    census.remaining_family = orbit_closure(remaining_seeds, OrbitOps{});

    for (const auto& s : census.all) {
        if (reverse(s) == complement(s)) ++census.reverse_equals_complement;
    }

    std::vector<SteppingSequence> overlap;
    std::set_intersection(census.product_family.begin(), census.product_family.end(),
                          census.remaining_family.begin(), census.remaining_family.end(),
                          std::back_inserter(overlap));
    census.families_disjoint = overlap.empty();

    std::vector<SteppingSequence> unioned;
    std::set_union(census.product_family.begin(), census.product_family.end(),
                   census.remaining_family.begin(), census.remaining_family.end(),
                   std::back_inserter(unioned));
    census.families_cover_all = unioned == census.all;

    return census;
}

bool parity_check(int m) {
    SearchConfig config;
    config.m = m;
    config.filter = Filter::Contiguous;
    bool ok = true;
    enumerate_visit(config, [&](std::span<const int> moves) {
        const int first = moves.front();
        const int last = moves.back();
        if (m % 2 == 0 && (first % 2 == 0 || last % 2 == 0)) ok = false;
        const bool direct = first % 2 == (m - 1) % 2 && last % 2 == 1;
        const bool reversed = last % 2 == (m - 1) % 2 && first % 2 == 1;
        if (!direct && !reversed) ok = false;
    });
    return ok;
}

} // namespace stepseq
