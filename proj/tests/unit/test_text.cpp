#include "doctest.h"

#include "stepseq/generators.hpp"
#include "stepseq/text.hpp"

using namespace stepseq;

TEST_SUITE_BEGIN("text");

TEST_CASE("format and parse moves") {
    CHECK(format_moves(recursive_r(4)) == "3 2 3 2 1 2 3 2 1 2 1");
    CHECK(format_moves({1, {}}) == "");

    CHECK(parse_moves("2 1 2 1", 3).moves == std::vector<int>{2, 1, 2, 1});
    CHECK(parse_moves("", 1).moves.empty());
    CHECK(parse_moves("  3  2 ", 4).moves == std::vector<int>{3, 2});
    CHECK(parse_moves("5", 3).moves == std::vector<int>{5}); // range left to verify

    CHECK_THROWS_AS(parse_moves("2 x 1", 3), ParseError);
    CHECK_THROWS_AS(parse_moves("2,1", 3), ParseError);
}

TEST_CASE("round trip") {
    for (int m = 2; m <= 10; ++m) {
        const SteppingSequence r = recursive_r(m);
        CHECK(parse_moves(format_moves(r), m) == r);
    }
}

TEST_CASE("labels with display offsets") {
    const DifferenceSequence chain = new_chain(4);
    CHECK(format_labels(chain) == "0,1,2,3");
    CHECK(format_labels(chain, 1) == "1,2,3,4");
    CHECK(format_labels(apply_move(chain, 3).first, 1) == "1,2,4,3");
}

TEST_CASE("mask rendering") {
    CHECK(format_mask_binary(0b1011, 4) == "1011");
    CHECK(format_mask_binary(0, 4) == "0000");
    CHECK(format_mask_binary(1, 1) == "1");
    CHECK(format_mask_decimal(0b1011) == "11");

    CHECK(format_subset(0) == "{}");
    CHECK(format_subset(0b1011) == "{0,1,3}");
    CHECK(format_subset(0b1011, 1) == "{1,2,4}");
}

TEST_CASE("ordering and k-subset rendering") {
    const GrayOrdering tiny{2, {0b00, 0b01, 0b11, 0b10}};
    CHECK(format_ordering(tiny, true) == "00\n01\n11\n10\n");
    CHECK(format_ordering(tiny, false) == "0\n1\n3\n2\n");

    const KSubsetOrdering pairs{3, 2, {0b011, 0b110}};
    CHECK(format_ksubsets(pairs) == "{0,1}\n{1,2}\n");
}

TEST_SUITE_END();
