#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "seqlab/sturmian.hpp"

using namespace seqlab;

namespace {

// oracle: 256-bit floating evaluation of floor(x*n + y); valid because the
// tested slopes are quadratic irrationals (or small rationals), so the
// fractional parts stay far above the rounding error at these n
mpf_class to_mpf(const Real& x) {
    mpf_class out(x.rational_part(), 256);
    if (x.radicand() != 0) {
        mpf_class root(0, 256);
        mpf_sqrt_ui(root.get_mpf_t(), x.radicand());
        out += mpf_class(x.radical_coeff(), 256) * root;
    }
    return out;
}

long oracle_floor(const mpf_class& x, u64 n, const mpf_class& y) {
    mpf_class v = x * mpf_class(static_cast<unsigned long>(n), 256) + y;
    mpf_class f(0, 256);
    mpf_floor(f.get_mpf_t(), v.get_mpf_t());
    return f.get_si();
}

// oracle: fixed point of 0 -> 01, 1 -> 0, independent of any bracket formula
std::vector<int> fibonacci_word(std::size_t len) {
    std::vector<int> w{0};
    while (w.size() < len) {
        std::vector<int> next;
        next.reserve(2 * w.size());
        for (int c : w) {
            next.push_back(0);
            if (c == 0) next.push_back(1);
        }
        w = std::move(next);
    }
    w.resize(len);
    return w;
}

}  // namespace

TEST_CASE("golden-slope values and rational degenerations") {
    Sequence g = sturmian(Real::golden(), Real(mpq_class(0)));
    int expect[] = {0, 1, 0, 1, 1};
    for (u64 n = 0; n < 5; ++n) CHECK(g(n) == expect[n]);

    Sequence half = sturmian(Real(mpq_class(1, 2)), Real(mpq_class(0)));
    for (u64 n = 0; n < 1000; ++n) CHECK(half(n) == static_cast<int>(n % 2));

    CHECK(g.alphabet().size == 2);
}

TEST_CASE("floor and ceiling variants against the high-precision oracle") {
    // the floating oracle is only sound for irrational slopes: rational
    // multiples land exactly on integers, where any rounding misfloors
    std::vector<Real> slopes = {Real::golden(), Real::inv_sqrt2(),
                                Real(mpq_class(-1), mpq_class(1), 3)};
    std::vector<Real> intercepts = {Real(mpq_class(0)), Real(mpq_class(3, 10))};
    for (const Real& th : slopes) {
        mpf_class tf = to_mpf(th);
        for (const Real& rho : intercepts) {
            mpf_class rf = to_mpf(rho);
            Sequence fl = sturmian(th, rho, BracketMode::floor_diff);
            Sequence ce = sturmian(th, rho, BracketMode::ceil_diff);
            for (u64 n = 0; n < 2000; ++n) {
                long lo = oracle_floor(tf, n, rf);
                long hi = oracle_floor(tf, n + 1, rf);
                CHECK(fl(n) == static_cast<int>(hi - lo));
                CHECK((ce(n) == 0 || ce(n) == 1));
            }
        }
    }

    // rational slopes against exact integer arithmetic instead
    for (const mpq_class& th : {mpq_class(2, 7), mpq_class(9, 10)}) {
        for (const mpq_class& rho : {mpq_class(0), mpq_class(3, 10)}) {
            Sequence fl = sturmian(Real(th), Real(rho), BracketMode::floor_diff);
            for (u64 n = 0; n < 2000; ++n) {
                auto exact_floor = [&](u64 k) {
                    mpq_class v = th * mpq_class(mpz_class(static_cast<unsigned long>(k))) + rho;
                    mpz_class f;
                    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
                    return f.get_si();
                };
                CHECK(fl(n) == static_cast<int>(exact_floor(n + 1) - exact_floor(n)));
            }
        }
    }

    // for an irrational slope with rho = 0 the two modes differ exactly at
    // n = 0 and nowhere else below 10^3
    Sequence fl = sturmian(Real::golden(), Real(mpq_class(0)), BracketMode::floor_diff);
    Sequence ce = sturmian(Real::golden(), Real(mpq_class(0)), BracketMode::ceil_diff);
    CHECK(fl(0) == 0);
    CHECK(ce(0) == 1);
    for (u64 n = 1; n < 1000; ++n) CHECK(fl(n) == ce(n));
}

TEST_CASE("fibonacci substitution word is the bracket word of slope (3-sqrt5)/2") {
    Real slope(mpq_class(3, 2), mpq_class(-1, 2), 5);
    Sequence s = sturmian(slope, slope);
    auto oracle = fibonacci_word(10000);
    for (u64 n = 0; n < 10000; ++n) CHECK(s(n) == oracle[n]);
}

TEST_CASE("slope and intercept validation") {
    Real zero{mpq_class(0)}, one{mpq_class(1)};
    CHECK_THROWS_AS(sturmian(zero, zero), std::invalid_argument);
    CHECK_THROWS_AS(sturmian(one, zero), std::invalid_argument);
    CHECK_THROWS_AS(sturmian(Real(mpq_class(3, 2)), zero), std::invalid_argument);
    CHECK_THROWS_AS(sturmian(Real::golden(), one), std::invalid_argument);
    CHECK_THROWS_AS(sturmian(Real::golden(), Real(mpq_class(-1, 10))), std::invalid_argument);
}

TEST_CASE("patched blocks: single block, prefixes, and boundary density") {
    Real th = Real::golden();
    Real r0{mpq_class(0)}, r1{mpq_class(3, 10)}, r2{mpq_class(7, 10)};

    Sequence single = patched_sturmian(th, {r1}, {100});
    Sequence plain = sturmian(th, r1);
    for (u64 n = 0; n < 10000; ++n) CHECK(single(n) == plain(n));

    Sequence two = patched_sturmian(th, {r0, r1}, {100, 1000000});
    Sequence first = sturmian(th, r0);
    Sequence second = sturmian(th, r1);
    for (u64 n = 0; n < 100; ++n) CHECK(two(n) == first(n));
    for (u64 n = 100; n < 5000; ++n) CHECK(two(n) == second(n));

    // three blocks of lengths 10^2, 10^4, 10^6: the intercept changes at
    // exactly two indices below 10^6, a fraction 2e-6 <= 3e-4
    Sequence three = patched_sturmian(th, {r0, r1, r2}, {100, 10000, 1000000});
    u64 boundaries = 0;
    for (u64 cut : {u64{100}, u64{10100}})
        if (cut < 1000000) ++boundaries;
    CHECK(static_cast<double>(boundaries) / 1e6 <= 3e-4);
    Sequence third = sturmian(th, r2);
    for (u64 n = 10100; n < 20000; ++n) CHECK(three(n) == third(n));
    for (u64 n = 100; n < 10100; ++n) CHECK(three(n) == second(n));

    CHECK_THROWS_AS(patched_sturmian(th, {}, {}), std::invalid_argument);
    auto bad_lengths = std::vector<u64>{100, 100};
    CHECK_THROWS_AS(patched_sturmian(th, {r0, r1}, bad_lengths), std::invalid_argument);
    auto mismatched = std::vector<u64>{100};
    CHECK_THROWS_AS(patched_sturmian(th, {r0, r1}, mismatched), std::invalid_argument);
}

TEST_CASE("floor-mod progressions") {
    Sequence flat = bracket_floor_mod(Real(mpq_class(0)), Real(mpq_class(1, 2)), 2);
    for (u64 n = 0; n < 100; ++n) CHECK(flat(n) == 0);

    Sequence ramp = bracket_floor_mod(Real(mpq_class(1)), Real(mpq_class(0)), 3);
    for (u64 n = 0; n < 300; ++n) CHECK(ramp(n) == static_cast<int>(n % 3));
    CHECK(ramp.alphabet().size == 3);

    Sequence root2 = bracket_floor_mod(Real::sqrt_of(2), Real(mpq_class(0)), 2);
    int expect[] = {0, 1, 0, 0, 1, 1};
    for (u64 n = 0; n < 6; ++n) CHECK(root2(n) == expect[n]);

    // arbitrary slope sign: values stay in the alphabet and match the oracle
    Real neg = Real(mpq_class(0)) - Real::sqrt_of(2);
    Sequence down = bracket_floor_mod(neg, Real(mpq_class(1, 3)), 5);
    mpf_class nf = to_mpf(neg), bf = to_mpf(Real(mpq_class(1, 3)));
    for (u64 n = 0; n < 1000; ++n) {
        long v = oracle_floor(nf, n, bf);
        long want = ((v % 5) + 5) % 5;
        CHECK(down(n) == static_cast<int>(want));
    }

    CHECK_THROWS_AS(bracket_floor_mod(Real(mpq_class(1)), Real(mpq_class(0)), 1),
                    std::invalid_argument);
}
