#include "doctest.h"

#include <algorithm>

#include "stepseq/generators.hpp"
#include "stepseq/graycode.hpp"
#include "stepseq/search.hpp"
#include "stepseq/transforms.hpp"

using namespace stepseq;

TEST_SUITE_BEGIN("search");

TEST_CASE("m=3 has exactly the two known stepping sequences") {
    const auto result = enumerate({.m = 3, .filter = Filter::All, .mode = Mode::Collect});
    CHECK(result.count == 2);
    REQUIRE(result.sequences.size() == 2);
    CHECK(result.sequences[0].moves == std::vector<int>{1, 2, 1, 2});
    CHECK(result.sequences[1].moves == std::vector<int>{2, 1, 2, 1});
}

TEST_CASE("m=4 census count") {
    const auto result = enumerate({.m = 4, .filter = Filter::All, .mode = Mode::Count});
    CHECK(result.count == 34);
    CHECK(result.sequences.empty());
}

TEST_CASE("collect mode emits verified sequences in lexicographic order") {
    const auto result = enumerate({.m = 4, .filter = Filter::All, .mode = Mode::Collect});
    REQUIRE(result.count == result.sequences.size());
    for (std::size_t i = 0; i + 1 < result.sequences.size(); ++i) {
        CHECK(result.sequences[i].moves < result.sequences[i + 1].moves);
    }
    for (const auto& s : result.sequences) {
        CHECK(verify(s).valid);
    }
}

TEST_CASE("strongly contiguous census for small m") {
    CHECK(enumerate({.m = 4, .filter = Filter::StronglyContiguous}).count == 1);
    CHECK(enumerate({.m = 5, .filter = Filter::StronglyContiguous}).count == 1);

    const auto strong6 = enumerate(
        {.m = 6, .filter = Filter::StronglyContiguous, .mode = Mode::Collect});
    CHECK(strong6.count == 2);
    REQUIRE(strong6.sequences.size() == 2);
    // both start 5,4,5,4,3; the alternate continues with 2, the canonical with 4
    CHECK(strong6.sequences[0] == a6());
    CHECK(strong6.sequences[1] == recursive_r(6));
}

TEST_CASE("the m=4/5 strongly contiguous member is the canonical sequence") {
    const auto strong4 = enumerate(
        {.m = 4, .filter = Filter::StronglyContiguous, .mode = Mode::Collect});
    REQUIRE(strong4.sequences.size() == 1);
    CHECK(strong4.sequences[0] == recursive_r(4));

    const auto strong5 = enumerate(
        {.m = 5, .filter = Filter::StronglyContiguous, .mode = Mode::Collect});
    REQUIRE(strong5.sequences.size() == 1);
    CHECK(strong5.sequences[0] == recursive_r(5));
}

TEST_CASE("strongly contiguous counts satisfy the squaring bound") {
    const auto c4 = enumerate({.m = 4, .filter = Filter::StronglyContiguous}).count;
    const auto c5 = enumerate({.m = 5, .filter = Filter::StronglyContiguous}).count;
    const auto c6 = enumerate({.m = 6, .filter = Filter::StronglyContiguous}).count;
    CHECK(c5 >= c4 * c4);
    CHECK(c6 >= c5 * c5);
}

TEST_CASE("contiguous results are strongly contiguous up to reversal for m <= 6") {
    for (int m = 4; m <= 6; ++m) {
        enumerate_visit({.m = m, .filter = Filter::Contiguous}, [&](std::span<const int> moves) {
            SteppingSequence s{m, {moves.begin(), moves.end()}};
            const bool direct = is_strongly_contiguous(s);
            const bool reversed = is_strongly_contiguous(reverse(s));
            CHECK((direct || reversed));
        });
    }
}

TEST_CASE("count is thread-schedule independent") {
    for (int threads : {1, 2, 4}) {
        CHECK(enumerate({.m = 4, .filter = Filter::All, .mode = Mode::Count,
                         .node_budget = std::nullopt, .threads = threads})
                  .count == 34);
    }
    const auto single =
        enumerate({.m = 5, .filter = Filter::StronglyContiguous, .mode = Mode::Count});
    const auto pooled =
        enumerate({.m = 5, .filter = Filter::StronglyContiguous, .mode = Mode::Count,
                   .node_budget = std::nullopt, .threads = 4});
    CHECK(single.count == pooled.count);
    CHECK(single.nodes == pooled.nodes);
}

TEST_CASE("collect is deterministic across thread counts") {
    const auto one = enumerate({.m = 4, .filter = Filter::All, .mode = Mode::Collect,
                                .node_budget = std::nullopt, .threads = 1});
    const auto four = enumerate({.m = 4, .filter = Filter::All, .mode = Mode::Collect,
                                 .node_budget = std::nullopt, .threads = 4});
    CHECK(one.sequences == four.sequences);
}

TEST_CASE("node budget raises a partial-result error") {
    SearchConfig config{.m = 4, .filter = Filter::All, .mode = Mode::Count,
                        .node_budget = 10};
    try {
        enumerate(config);
        FAIL("expected BudgetExhaustedError");
    } catch (const BudgetExhaustedError& e) {
        CHECK(e.nodes_explored() == 11);
        CHECK(e.partial_count() == 0);
    }
}

TEST_CASE("a budget unlocks probing past the feasibility default") {
    // m=7 strongly contiguous, tiny budget: must abort, not reject
    SearchConfig config{.m = 7, .filter = Filter::StronglyContiguous,
                        .mode = Mode::Count, .node_budget = 1000};
    CHECK_THROWS_AS(enumerate(config), BudgetExhaustedError);
}

TEST_CASE("config guards") {
    CHECK_THROWS_AS(enumerate({.m = 6, .filter = Filter::All}), ResourceLimitError);
    CHECK_THROWS_AS(enumerate({.m = 7, .filter = Filter::Contiguous}), ResourceLimitError);
    CHECK_THROWS_AS(enumerate({.m = 1}), std::domain_error);
    CHECK_THROWS_AS(
        enumerate({.m = 7, .filter = Filter::StronglyContiguous, .mode = Mode::Collect,
                   .node_budget = 100}),
        std::domain_error); // collect cap
    CHECK_THROWS_AS(enumerate({.m = 4, .filter = Filter::All, .mode = Mode::Count,
                               .node_budget = std::nullopt, .threads = 0}),
                    std::domain_error);
}

TEST_CASE("census of the m=4 population") {
    const CensusM4 census = census_m4();
    CHECK(census.total == 34);
    CHECK(census.all.size() == 34);
    CHECK(census.combinator_products.size() == 8);
    CHECK(census.product_family.size() == 18);
    CHECK(census.remaining_family.size() == 16);
    CHECK(census.reverse_equals_complement == 10);
    CHECK(census.families_disjoint);
    CHECK(census.families_cover_all);

    // the four listed products and their reverses are among the products
    const std::vector<std::vector<int>> listed = {
        {3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1},
        {2, 3, 2, 3, 1, 2, 3, 1, 2, 1, 2},
        {3, 2, 3, 2, 1, 2, 3, 1, 2, 1, 2},
        {2, 3, 2, 3, 1, 2, 3, 2, 1, 2, 1},
    };
    for (const auto& moves : listed) {
        const SteppingSequence s{4, moves};
        CHECK(std::count(census.combinator_products.begin(),
                         census.combinator_products.end(), s) == 1);
        CHECK(std::count(census.combinator_products.begin(),
                         census.combinator_products.end(), reverse(s)) == 1);
        CHECK(std::count(census.all.begin(), census.all.end(), s) == 1);
    }
}

TEST_CASE("endpoint parity laws hold for the searchable range") {
    CHECK(parity_check(3));
    CHECK(parity_check(4));
    CHECK(parity_check(5));
    CHECK(parity_check(6));
}

TEST_SUITE_END();
