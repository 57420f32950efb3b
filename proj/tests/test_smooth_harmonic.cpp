#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "seqlab/gamma_schedule.hpp"
#include "seqlab/harmonic.hpp"
#include "seqlab/smooth.hpp"

using namespace seqlab;

// ---------------------------------------------------------------------------
// oracles
// ---------------------------------------------------------------------------

static mpq_class naive_harmonic(u64 a, u64 b) {
    mpq_class s = 0;
    for (u64 j = a + 1; j <= b; ++j) s += mpq_class(1, j);
    return s;
}

// Hamming-style two-pointer merge; independent of the library's generate+sort
static std::vector<u64> merge_smooth_oracle(u64 limit) {
    std::vector<u64> v = {1};
    std::size_t i2 = 0, i3 = 0;
    while (true) {
        u64 n2 = v[i2] * 2, n3 = v[i3] * 3;
        u64 nx = std::min(n2, n3);
        if (nx > limit) break;
        if (nx == n2) ++i2;
        if (nx == n3) ++i3;
        v.push_back(nx);
    }
    return v;
}

// slow interval parity: largest 2^a 3^b <= n by direct scan over exponents
static int slow_parity(u64 n, const SmoothSchedule& sched) {
    u64 best = 1;
    int best_beta = 0;
    for (u64 p3 = 1, b = 0;; p3 *= 3, ++b) {
        u64 v = p3;
        while (true) {
            if (v <= n && v > best) {
                best = v;
                best_beta = static_cast<int>(b);
            }
            if (v > n / 2) break;
            v *= 2;
        }
        if (p3 > n / 3) break;
    }
    if (best == 1 && 1 <= n) best_beta = 0;
    return sched.parity(best_beta);
}

// ---------------------------------------------------------------------------

TEST_CASE("exact harmonic range sums") {
    CHECK(harmonic_range_exact(0, 1) == mpq_class(1));
    CHECK(harmonic_range_exact(0, 2) == mpq_class(3, 2));
    CHECK(harmonic_range_exact(0, 6) == mpq_class(49, 20));
    CHECK(harmonic_range_exact(5, 5) == 0);
    CHECK(harmonic_range_exact(10, 20) == naive_harmonic(10, 20));
    CHECK(harmonic_range_exact(1000, 1500) == naive_harmonic(1000, 1500));
    // consistency across a split point
    CHECK(harmonic_range_exact(0, 100000) ==
          harmonic_range_exact(0, 33333) + harmonic_range_exact(33333, 100000));
    double h = harmonic_range_exact(0, 100000).get_d();
    CHECK(h == doctest::Approx(std::log(100000.0) + 0.5772156649015329).epsilon(1e-6));
    CHECK_THROWS_AS(harmonic_range_exact(7, 3), std::invalid_argument);
}

TEST_CASE("unit fraction sums and range unions") {
    CHECK(unit_fraction_sum({}) == 0);
    CHECK(unit_fraction_sum({2, 3, 6}) == 1);
    std::vector<u64> d;
    mpq_class direct = 0;
    for (u64 i = 1; i <= 500; ++i) {
        d.push_back(i * i);
        direct += mpq_class(1, i * i);
    }
    CHECK(unit_fraction_sum(d) == direct);
    CHECK_THROWS_AS(unit_fraction_sum({1, 0}), std::invalid_argument);

    CHECK(harmonic_ranges_exact({{0, 10}, {10, 20}}) == harmonic_range_exact(0, 20));
    CHECK(harmonic_ranges_exact({{5, 9}, {100, 200}}) ==
          harmonic_range_exact(5, 9) + harmonic_range_exact(100, 200));
    CHECK(harmonic_ranges_exact({}) == 0);
}

TEST_CASE("harmonic enclosures bracket the exact value") {
    for (u64 x : {u64(5), u64(999), u64(100001), u64(123456), u64(2000000)}) {
        auto [lo, hi] = harmonic_enclosure(mpz_class(static_cast<unsigned long>(x)));
        mpq_class exact = harmonic_range_exact(0, x);
        CHECK(lo <= exact);
        CHECK(exact <= hi);
        mpq_class width = hi - lo;
        if (x > 100000) {
            CHECK(width > 0);
            CHECK(width.get_d() < 1e-28);
        } else {
            CHECK(width == 0);
        }
    }
    // a genuinely large argument: finite, ordered, sane magnitude
    mpz_class big = 1;
    for (int i = 0; i < 252; ++i) big *= 3;
    auto [blo, bhi] = harmonic_enclosure(big);
    CHECK(blo < bhi);
    double approx = blo.get_d();
    CHECK(approx == doctest::Approx(252 * std::log(3.0) + 0.5772156649).epsilon(1e-9));
    CHECK_THROWS_AS(harmonic_enclosure(mpz_class(0)), std::invalid_argument);
}

TEST_CASE("smooth enumeration") {
    auto s12 = smooth_enumeration(12);
    std::vector<u64> want = {1, 2, 3, 4, 6, 8, 9, 12};
    REQUIRE(s12.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(s12[i].value == want[i]);

    auto s1 = smooth_enumeration(1);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].value == 1);
    CHECK(s1[0].alpha == 0);
    CHECK(s1[0].beta == 0);

    auto s = smooth_enumeration(100000000);
    auto oracle = merge_smooth_oracle(100000000);
    REQUIRE(s.size() == oracle.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].value == oracle[i]);
        // exponents actually factor the value
        u64 v = s[i].value;
        for (int a = 0; a < s[i].alpha; ++a) {
            REQUIRE(v % 2 == 0);
            v /= 2;
        }
        for (int b = 0; b < s[i].beta; ++b) {
            REQUIRE(v % 3 == 0);
            v /= 3;
        }
        CHECK(v == 1);
    }
    // gaps shrink toward 1, though not monotonically: the windowed maximum
    // of consecutive ratios decreases
    auto max_ratio = [&](std::size_t lo, std::size_t hi) {
        double m = 0;
        for (std::size_t i = lo; i < hi; ++i)
            m = std::max(m, double(s[i + 1].value) / double(s[i].value));
        return m;
    };
    double m1 = max_ratio(100, 150), m2 = max_ratio(150, 200), m3 = max_ratio(200, s.size() - 1);
    CHECK(m1 >= m2);
    CHECK(m2 >= m3);
    CHECK(m3 < 1.07);
}

TEST_CASE("full-range table and interval lookup") {
    const auto& t = smooth_table_u64();
    CHECK(t.size() > 1000);
    CHECK(t.front().value == 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) CHECK(t[i].value < t[i + 1].value);
    CHECK(smooth_interval_index(1) == 0);
    CHECK(smooth_interval_index(5) == 3);  // 1,2,3,4 | 5 in [4,6)
    for (u64 n = 1; n < 500; ++n) {
        std::size_t i = smooth_interval_index(n);
        CHECK(t[i].value <= n);
        CHECK(n < t[i + 1].value);
    }
    CHECK_THROWS_AS(smooth_interval_index(0), std::invalid_argument);
}

TEST_CASE("schedule validation and windows") {
    SmoothSchedule ok{{0, 1, 13}};
    ok.validate();
    CHECK(ok.window_index(0) == 0);
    CHECK(ok.window_index(1) == 1);
    CHECK(ok.window_index(12) == 1);
    CHECK(ok.window_index(13) == 2);
    CHECK(ok.window_index(1000) == 2);  // clamped into the last window
    SmoothSchedule bad1{{1, 2}}, bad2{{0, 2, 2}}, bad3{{}};
    CHECK_THROWS_AS(bad1.validate(), std::invalid_argument);
    CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
    CHECK_THROWS_AS(bad3.validate(), std::invalid_argument);
}

TEST_CASE("smooth parity sequence") {
    SmoothSchedule trivial{{0}};
    auto a0 = smooth_parity_sequence(trivial);
    for (u64 n = 0; n < 1000; ++n) CHECK(a0(n) == 0);

    SmoothSchedule s01{{0, 1}};
    auto a = smooth_parity_sequence(s01);
    CHECK(a(0) == 0);
    CHECK(a(3) == 1);  // [3,4) has beta = 1
    for (u64 n = 1; n < 2000; ++n) CHECK(a(n) == slow_parity(n, s01));

    SmoothSchedule deep{{0, 1, 13, 252}};
    auto b = smooth_parity_sequence(deep);
    for (u64 n = 1; n < 2000; ++n) CHECK(b(n) == slow_parity(n, deep));
}

TEST_CASE("invariance defect of the parity sequence shrinks") {
    SmoothSchedule deep{{0, 1, 13, 252}};
    auto a = smooth_parity_sequence(deep);
    auto violations = [&](u64 N) {
        u64 c = 0;
        for (u64 n = 0; n < N; ++n)
            if (!(a(n) == a(n + 1) && a(n) == a(2 * n))) ++c;
        return double(c) / double(N);
    };
    double d1 = violations(10000), d2 = violations(50000), d3 = violations(200000);
    CHECK(d3 <= 0.05);
    CHECK(d2 >= d3);
    CHECK(d1 >= d2);
}

TEST_CASE("log averages: exact and enclosure paths agree") {
    SmoothSchedule s{{0, 1}};
    for (long g : {2L, 5L, 9L, 13L}) {
        LogAverage ex = log_average_at(s, g);
        REQUIRE(ex.exact);
        LogAverage en = log_average_enclosure(s, g);
        CHECK(en.lo <= ex.lo);
        CHECK(ex.hi <= en.hi);
        CHECK(mpq_class(en.hi - en.lo).get_d() < 1e-25);
    }
}

TEST_CASE("schedule search finds the frozen minimal levels") {
    SmoothSchedule s3 = gamma_schedule(3);
    REQUIRE(s3.gamma.size() == 4);
    CHECK(s3.gamma[0] == 0);
    CHECK(s3.gamma[1] == 1);
    CHECK(s3.gamma[2] == 13);
    CHECK(s3.gamma[3] == 252);

    // level-2 value just above 3/4, and the point below misses the window
    LogAverage L13 = log_average_at(SmoothSchedule{{0, 1}}, 13);
    CHECK(L13.value() == doctest::Approx(0.752260779).epsilon(1e-6));
    CHECK(L13.lo > mpq_class(3, 4));
    LogAverage L12 = log_average_at(SmoothSchedule{{0, 1}}, 12);
    CHECK(L12.hi < mpq_class(3, 4));
    CHECK(L12.value() == doctest::Approx(0.733466624).epsilon(1e-6));

    // level-3 value just under 1/8 at 252, still above at 251
    LogAverage L252 = log_average_at(SmoothSchedule{{0, 1, 13}}, 252);
    CHECK(L252.hi < mpq_class(1, 8));
    CHECK(L252.value() == doctest::Approx(0.124931026).epsilon(1e-6));
    LogAverage L251 = log_average_at(SmoothSchedule{{0, 1, 13}}, 251);
    CHECK(L251.lo >= mpq_class(1, 8));

    CHECK_THROWS_AS(gamma_schedule(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(gamma_schedule(0), std::invalid_argument);
}

TEST_CASE("window membership checks at every level") {
    SmoothSchedule s3 = gamma_schedule(3);
    auto a = smooth_parity_sequence(s3);
    for (int j = 0; j <= 3; ++j) {
        auto r = log_osc_check(a, s3, j);
        CHECK(r.pass);
        CHECK(r.j == j);
        CHECK(r.gamma_j == s3.gamma[static_cast<std::size_t>(j)]);
    }
    // the windows themselves
    auto r1 = log_osc_check(a, s3, 1);
    CHECK(r1.measured >= 0.0);
    CHECK(r1.measured < 0.5);
    auto r2 = log_osc_check(a, s3, 2);
    CHECK(r2.measured > 0.75);
    auto r3 = log_osc_check(a, s3, 3);
    CHECK(r3.measured < 0.125);

    // minimality: stepping the last level down one makes that level fail
    SmoothSchedule almost{{0, 1, 12}};
    auto b = smooth_parity_sequence(almost);
    CHECK_FALSE(log_osc_check(b, almost, 2).pass);

    SmoothSchedule almost3{{0, 1, 13, 251}};
    auto c = smooth_parity_sequence(almost3);
    CHECK_FALSE(log_osc_check(c, almost3, 3).pass);

    // wrong sequence for the schedule is refused (first disagreement at n=3,
    // well inside the checked prefix)
    SmoothSchedule other{{0, 2}};
    auto d = smooth_parity_sequence(other);
    CHECK_THROWS_AS(log_osc_check(d, s3, 2), std::invalid_argument);
    // level outside the schedule
    CHECK_THROWS_AS(log_osc_check(a, s3, 4), std::invalid_argument);
}

TEST_CASE("interval mass at a fixed 3-exponent") {
    // K=4 covers 1,2,3,4 with betas 0,0,1,0: nothing at beta=5
    auto none = smooth_log_mass(5, 4);
    CHECK(none.mass == 0);
    CHECK(none.ratio == 0.0);

    // K=1: only [1,2), mass 1/2, H_1 = 2
    auto one = smooth_log_mass(0, 1);
    CHECK(one.mass == mpq_class(1, 2));
    CHECK(one.ratio == doctest::Approx(0.5 / std::log(2.0)).epsilon(1e-12));

    // beta=0 mass thins out: ratio decreasing over a tail of cutoffs
    const auto& t = smooth_table_u64();
    std::vector<std::size_t> Ks;
    for (std::size_t K = 0; K + 1 < t.size(); ++K)
        if (t[K].value > 1000 && t[K].value <= 1000000 && (Ks.empty() || K >= Ks.back() + 15))
            Ks.push_back(K);
    REQUIRE(Ks.size() >= 4);
    double prev = 2.0;
    for (std::size_t K : Ks) {
        double r = smooth_log_mass(0, K).ratio;
        CHECK(r < prev);
        prev = r;
    }
    // The far cutoff: the decay toward 0 goes like log log H / log H, so at
    // H_K near 10^8 the true value still sits around 0.15. Frozen from the
    // exact computation.
    std::size_t Kbig = 0;
    while (t[Kbig].value <= 100000000) ++Kbig;
    auto far = smooth_log_mass(0, Kbig);
    CHECK(far.ratio == doctest::Approx(0.149914).epsilon(1e-4));
    CHECK(far.ratio < prev);
}
