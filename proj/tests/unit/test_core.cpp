#include "doctest.h"

#include <random>

#include "stepseq/core.hpp"
#include "stepseq/generators.hpp"

using namespace stepseq;

TEST_SUITE_BEGIN("core");

TEST_CASE("new_chain is the identity chain") {
    const DifferenceSequence chain = new_chain(4);
    CHECK(chain.labels() == std::vector<int>{0, 1, 2, 3});
    CHECK(chain.subset(3) == 0b0111);

    CHECK(new_chain(2).labels() == std::vector<int>{0, 1});
    CHECK_THROWS_AS(new_chain(65), std::domain_error);
    CHECK_THROWS_AS(new_chain(1), std::domain_error);
    CHECK_THROWS_AS(new_chain(0), std::domain_error);
}

TEST_CASE("subset_at endpoints and bounds") {
    const DifferenceSequence chain = new_chain(4);
    CHECK(subset_at(chain, 0) == 0b0000);
    CHECK(subset_at(chain, 4) == 0b1111);
    CHECK_THROWS_AS(subset_at(chain, 5), std::domain_error);
    CHECK_THROWS_AS(subset_at(chain, -1), std::domain_error);
}

// the worked m=4 table uses display labels {1,2,3,4}; internally that chain
// is <0,1,2,3>, so its rows translate by subtracting one from every label
TEST_CASE("apply_move follows the worked m=4 rows") {
    DifferenceSequence chain = new_chain(4);

    auto [after3, s3] = apply_move(chain, 3);
    CHECK(after3.labels() == std::vector<int>{0, 1, 3, 2}); // displayed <1,2,4,3>
    CHECK(s3 == (Mask{1} << 0 | Mask{1} << 1 | Mask{1} << 3)); // displayed {1,2,4}

    auto [after2, s2] = apply_move(after3, 2);
    CHECK(after2.labels() == std::vector<int>{0, 3, 1, 2}); // displayed <1,4,2,3>
    CHECK(s2 == (Mask{1} << 0 | Mask{1} << 3)); // displayed {1,4}

    // the row <1,4,3,2>: S_3 = {1,3,4} displayed, {0,2,3} internal
    auto [after3b, s3b] = apply_move(after2, 3);
    CHECK(after3b.labels() == std::vector<int>{0, 3, 2, 1});
    CHECK(s3b == (Mask{1} << 0 | Mask{1} << 2 | Mask{1} << 3));

    CHECK_THROWS_AS(apply_move(chain, 0), std::domain_error);
    CHECK_THROWS_AS(apply_move(chain, 4), std::domain_error);
}

TEST_CASE("apply_move is an involution") {
    // for all m <= 12 and all i: move twice restores the chain, and the
    // regenerated subset is the pre-move subset_at(i)
    for (int m = 2; m <= 12; ++m) {
        DifferenceSequence chain = new_chain(m);
        // scramble deterministically first
        std::mt19937 rng(m);
        for (int step = 0; step < 50; ++step) {
            std::uniform_int_distribution<int> dist(1, m - 1);
            chain = apply_move(chain, dist(rng)).first;
        }
        for (int i = 1; i <= m - 1; ++i) {
            const Mask before = chain.subset(i);
            auto [once, produced] = apply_move(chain, i);
            CHECK(produced != before);
            auto [twice, regenerated] = apply_move(once, i);
            CHECK(twice == chain);
            CHECK(regenerated == before);
        }
    }
}

TEST_CASE("ChainSimulator agrees with the immutable chain ops") {
    std::mt19937 rng(7);
    for (int m : {2, 3, 5, 9, 16}) {
        ChainSimulator sim(m);
        DifferenceSequence chain = new_chain(m);
        std::uniform_int_distribution<int> dist(1, m - 1);
        for (int step = 0; step < 200; ++step) {
            const int i = dist(rng);
            CHECK(sim.peek(i) == apply_move(chain, i).second);
            const Mask got = sim.apply(i);
            chain = apply_move(chain, i).first;
            CHECK(got == chain.subset(i));
            for (int j = 0; j <= m; ++j) CHECK(sim.subset(j) == chain.subset(j));
        }
        CHECK(sim.chain() == chain);
    }
}

TEST_CASE("verify accepts the known small stepping sequences") {
    CHECK(verify({3, {2, 1, 2, 1}}).valid);
    CHECK(verify({3, {1, 2, 1, 2}}).valid);
    CHECK(verify({4, {3, 2, 3, 2, 1, 2, 3, 1, 2, 1, 2}}).valid);
    CHECK(verify({1, {}}).valid); // nothing to produce beyond the initial sets
    CHECK(verify({2, {1}}).valid);
}

TEST_CASE("verify reports the earliest violation with a typed reason") {
    SUBCASE("consecutive equal moves") {
        const VerificationReport r = verify({2, {1, 1}});
        REQUIRE_FALSE(r.valid);
        CHECK(r.reason == FailureReason::ConsecutiveEqualMoves);
        CHECK(r.failure_step == 2);
    }
    SUBCASE("wrong length") {
        const VerificationReport r = verify({3, {2, 1, 2}});
        REQUIRE_FALSE(r.valid);
        CHECK(r.reason == FailureReason::WrongLength);
        CHECK_FALSE(r.failure_step.has_value());
    }
    SUBCASE("index out of range") {
        const VerificationReport r = verify({3, {2, 3, 2, 1}});
        REQUIRE_FALSE(r.valid);
        CHECK(r.reason == FailureReason::IndexOutOfRange);
        CHECK(r.failure_step == 2);
    }
    SUBCASE("repeated non-initial subset") {
        // hand-simulated: step 2 produces S_2 = {1,2}, step 8 produces it again
        const VerificationReport r = verify({4, {1, 2, 3, 2, 1, 2, 1, 2}});
        REQUIRE_FALSE(r.valid);
        CHECK(r.reason == FailureReason::RepeatedSubset);
        CHECK(r.failure_step == 8);
        CHECK(r.repeated_subset == Mask{0b0110});
    }
    SUBCASE("initial subset revisited") {
        // [2,1,2,1] completes the m=3 walk, so a fifth move must regenerate
        // an initial set: it alters S_2 = {1,2} back to {0,1}
        const VerificationReport r = verify({3, {2, 1, 2, 1, 2}});
        REQUIRE_FALSE(r.valid);
        CHECK(r.failure_step == 5);
        CHECK(r.reason == FailureReason::InitialSubsetRevisited);
    }
    SUBCASE("m=1 rejects any move") {
        const VerificationReport r = verify({1, {1}});
        REQUIRE_FALSE(r.valid);
        CHECK(r.reason == FailureReason::IndexOutOfRange);
        CHECK(r.failure_step == 1);
    }
}

TEST_CASE("verify resource limit") {
    CHECK_THROWS_AS(verify({29, {}}, 28), ResourceLimitError);
    CHECK_THROWS_AS(verify({0, {}}), std::domain_error);
    CHECK_THROWS_AS(verify({65, {}}, 65), std::domain_error);
    // raising the limit admits larger m (still fails on length, not resources)
    const VerificationReport r = verify({29, {}}, 29);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == FailureReason::WrongLength);
}

TEST_CASE("verify(R_m) for m up to 20") {
    for (int m = 2; m <= 20; ++m) {
        CHECK(verify(recursive_r(m)).valid);
    }
}

TEST_CASE("occurrence profile") {
    // counted off the recursion's expansion for m=4, cross-checked C(4,i)-1
    CHECK(occurrence_profile(recursive_r(4)) == std::vector<std::uint64_t>{3, 5, 3});
    CHECK(occurrence_profile({3, {2, 1, 2, 1}}) == std::vector<std::uint64_t>{2, 2});
    CHECK(occurrence_profile({1, {}}).empty());
    CHECK_THROWS_AS(occurrence_profile({3, {3}}), std::domain_error);
}

TEST_CASE("occurrence profile of R_m matches binomials for m up to 16") {
    for (int m = 2; m <= 16; ++m) {
        const auto counts = occurrence_profile(recursive_r(m));
        REQUIRE(counts.size() == static_cast<std::size_t>(m - 1));
        std::uint64_t binom = 1; // C(m,0)
        for (int i = 1; i <= m - 1; ++i) {
            binom = binom * static_cast<std::uint64_t>(m - i + 1) / static_cast<std::uint64_t>(i);
            CHECK(counts[i - 1] == binom - 1);
        }
    }
}

TEST_CASE("bit kernels") {
    CHECK(v2(1) == 0);
    CHECK(v2(4) == 2);
    CHECK(v2(12) == 2);
    CHECK_THROWS_AS(v2(0), std::domain_error);

    CHECK(hamming_weight(0) == 0);
    CHECK(hamming_weight(0b1011) == 3);
    for (int k = 0; k < 64; ++k) CHECK(hamming_weight(std::uint64_t{1} << k) == 1);
}

TEST_CASE("valuation/weight identities") {
    // sum_{i=1..j} (1 - v2(i)) = hamming_weight(j), here to 10^6
    std::int64_t acc = 0;
    for (std::uint64_t j = 1; j <= 1'000'000; ++j) {
        acc += 1 - v2(j);
        if (acc != hamming_weight(j)) {
            REQUIRE(acc == hamming_weight(j)); // report the first failing j only
        }
    }

    // sum_{i=1..j} v2(i) = j - hamming_weight(j), here to 10^4
    std::uint64_t vsum = 0;
    for (std::uint64_t j = 1; j <= 10'000; ++j) {
        vsum += static_cast<std::uint64_t>(v2(j));
        REQUIRE(vsum == j - static_cast<std::uint64_t>(hamming_weight(j)));
    }
}

TEST_CASE("stepping_length") {
    CHECK(stepping_length(1) == 0);
    CHECK(stepping_length(2) == 1);
    CHECK(stepping_length(4) == 11);
    CHECK(stepping_length(6) == 57);
    CHECK(stepping_length(64) == ~std::uint64_t{0} - 64);
}

TEST_CASE("is_well_formed") {
    CHECK(is_well_formed({3, {2, 1, 2, 1}}));
    CHECK(is_well_formed({1, {}}));
    CHECK_FALSE(is_well_formed({2, {1, 1}}));
    CHECK_FALSE(is_well_formed({3, {0, 1}}));
    CHECK_FALSE(is_well_formed({3, {3}}));
}

TEST_SUITE_END();
