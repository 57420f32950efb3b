#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "seqlab/base_closure.hpp"

using namespace seqlab;

TEST_CASE("membership in the exponent-vector span") {
    // one base and its powers span the same line
    BaseSpace eight = base_closure({8});
    CHECK(eight.member(2));
    CHECK(eight.member(4));
    CHECK(eight.member(64));
    CHECK_FALSE(eight.member(3));
    CHECK_FALSE(eight.member(6));
    CHECK(eight.basis.size() == 1);
    CHECK(eight.prime_support == std::vector<u64>{2});

    // a prime outside the support can never enter
    BaseSpace two = base_closure({2});
    CHECK_FALSE(two.member(6));
    CHECK(two.member(1024));

    // {2,3} spans the full 2-3 plane
    BaseSpace both = base_closure({2, 3});
    CHECK(both.member(6));
    CHECK(both.member(12));
    CHECK_FALSE(both.member(5));
    CHECK_FALSE(both.member(10));
    CHECK(both.basis.size() == 2);

    // 12 = (2,1) and 18 = (1,2) are independent, so they span the plane too
    BaseSpace skew = base_closure({12, 18});
    CHECK(skew.member(2));
    CHECK(skew.member(3));
    CHECK(skew.member(6));
    CHECK_FALSE(skew.member(5));

    // 4 and 8 are multiplicatively dependent: one line
    BaseSpace four = base_closure({4});
    CHECK(four.member(8));
    BaseSpace four_eight = base_closure({4, 8});
    CHECK(four_eight.basis.size() == 1);

    // k = 1 is the zero vector, always in the span
    CHECK(two.member(1));
    CHECK(base_closure({}).member(1));
    CHECK_FALSE(base_closure({}).member(2));

    CHECK_THROWS_AS(base_closure({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(two.member(0), std::invalid_argument);
}

TEST_CASE("the basis is in echelon form") {
    BaseSpace sp = base_closure({6, 10, 15, 30});
    // 30 = 6 * 5 = (6,10,15 combine): rank is 3 over primes {2,3,5}
    CHECK(sp.prime_support == std::vector<u64>{2, 3, 5});
    CHECK(sp.basis.size() == 3);
    REQUIRE(sp.pivots.size() == sp.basis.size());
    for (std::size_t j = 0; j + 1 < sp.pivots.size(); ++j)
        CHECK(sp.pivots[j] < sp.pivots[j + 1]);
    for (std::size_t j = 0; j < sp.basis.size(); ++j) {
        CHECK(sp.basis[j][sp.pivots[j]] != 0);
        for (std::size_t c = 0; c < sp.pivots[j]; ++c) CHECK(sp.basis[j][c] == 0);
    }
    // rank 3 over three primes: everything with support in {2,3,5} is in
    CHECK(sp.member(2));
    CHECK(sp.member(45));
    CHECK_FALSE(sp.member(7));
}

TEST_CASE("membership is invariant under raising bases to powers") {
    for (u64 k = 2; k <= 30; ++k) {
        BaseSpace plain = base_closure({k});
        BaseSpace squared = base_closure({k * k});
        BaseSpace cubed = base_closure({k * k * k});
        for (u64 x = 1; x <= 30; ++x) {
            bool m = plain.member(x);
            CHECK(squared.member(x) == m);
            CHECK(cubed.member(x) == m);
        }
    }
    // the same with one of two bases replaced
    for (u64 k = 2; k <= 12; ++k)
        for (u64 l = 2; l <= 12; ++l) {
            BaseSpace plain = base_closure({k, l});
            BaseSpace pow_first = base_closure({k * k * k, l});
            BaseSpace pow_second = base_closure({k, l * l});
            for (u64 x = 1; x <= 30; ++x) {
                bool m = plain.member(x);
                CHECK(pow_first.member(x) == m);
                CHECK(pow_second.member(x) == m);
            }
        }
}

TEST_CASE("members form a multiplicative semigroup") {
    std::vector<std::vector<u64>> base_sets = {{2}, {6}, {2, 3}, {2, 5}, {6, 10}, {4, 9}, {30}};
    for (u64 b = 2; b <= 30; ++b) base_sets.push_back({b});
    for (const auto& bases : base_sets) {
        BaseSpace sp = base_closure(bases);
        for (u64 k = 2; k <= 30; ++k)
            for (u64 l = k; l <= 30; ++l)
                if (sp.member(k) && sp.member(l)) CHECK(sp.member(k * l));
    }
}

TEST_CASE("redundant bases do not change the space") {
    BaseSpace lean = base_closure({2, 3});
    BaseSpace fat = base_closure({2, 3, 6, 12, 18, 24});
    CHECK(fat.basis.size() == 2);
    for (u64 x = 1; x <= 100; ++x) CHECK(lean.member(x) == fat.member(x));
}
