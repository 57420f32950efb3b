#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bitset>
#include <random>
#include <string>
#include <vector>

#include "seqlab/theta.hpp"

using namespace seqlab;

namespace {

// oracle: binary expansion via bitset, independent of digits_msd
std::string binary_string(u64 n) {
    if (n == 0) return "";
    std::string s = std::bitset<64>(n).to_string();
    return s.substr(s.find('1'));
}

// oracle: every length-m weight-k word in increasing numeric order, by scan
std::vector<std::string> weighted_words(int m, int k) {
    std::vector<std::string> out;
    for (u64 x = 0; x < (u64{1} << m); ++x) {
        if (popcount64(x) != k) continue;
        std::string w;
        for (int i = m - 1; i >= 0; --i) w += char('0' + ((x >> i) & 1));
        out.push_back(std::move(w));
    }
    return out;
}

int ones_of(const std::string& w) {
    int c = 0;
    for (char ch : w) c += ch == '1';
    return c;
}

}  // namespace

TEST_CASE("binomial table matches factorial recurrence and bounds") {
    CHECK(binomial64(0, 0) == 1);
    CHECK(binomial64(64, 0) == 1);
    CHECK(binomial64(64, 64) == 1);
    CHECK(binomial64(64, 32) == 1832624140942590534ULL);
    CHECK(binomial64(10, 3) == 120);
    CHECK(binomial64(5, 7) == 0);
    CHECK(binomial64(5, -1) == 0);
    CHECK_THROWS_AS(binomial64(65, 1), std::out_of_range);
    CHECK_THROWS_AS(binomial64(-1, 0), std::out_of_range);
    // Pascal identity across the whole table
    for (int n = 1; n <= 64; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binomial64(n, k) == binomial64(n - 1, k - 1) + binomial64(n - 1, k));
}

TEST_CASE("binary decomposition reconstructs and brackets every n below 2^20") {
    // n = 0 is the empty decomposition
    auto z = decompose_binary(0);
    CHECK(z.r == 0);
    CHECK(z.u_list.empty());
    CHECK(z.v.empty());

    u64 bad = 0;
    for (u64 n = 1; n < (u64{1} << 20); ++n) {
        auto d = decompose_binary(n);
        int s = popcount64(n);
        bool ok = true;
        // the weight bracket admits exactly one r, and it is the one returned
        int admissible = 0;
        for (int r = 0; r <= s; ++r)
            if (r * (r + 1) / 2 <= s && s <= r * (r + 1) / 2 + r) {
                ++admissible;
                ok = ok && r == d.r;
            }
        ok = ok && admissible == 1;
        std::string whole;
        for (int i = 0; i < d.r; ++i) {
            const std::string& u = d.u_list[static_cast<std::size_t>(i)];
            ok = ok && !u.empty() && u.back() == '1' && ones_of(u) == i + 1;
            whole += u;
        }
        ok = ok && static_cast<int>(d.u_list.size()) == d.r;
        ok = ok && ones_of(d.v) <= d.r;
        whole += d.v;
        ok = ok && whole == binary_string(n);
        if (!ok) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("decomposition worked examples") {
    auto d6 = decompose_binary(6);
    CHECK(d6.r == 1);
    REQUIRE(d6.u_list.size() == 1);
    CHECK(d6.u_list[0] == "1");
    CHECK(d6.v == "10");

    auto d23 = decompose_binary(23);
    CHECK(d23.r == 2);
    REQUIRE(d23.u_list.size() == 2);
    CHECK(d23.u_list[0] == "1");
    CHECK(d23.u_list[1] == "011");
    CHECK(d23.v == "1");
}

TEST_CASE("word rank agrees with enumeration order") {
    for (int m = 0; m <= 12; ++m) {
        for (int k = 0; k <= m; ++k) {
            auto words = weighted_words(m, k);
            CHECK(words.size() == binomial64(m, k));
            for (std::size_t i = 0; i < words.size(); ++i)
                CHECK(word_rank(words[i]) == i);
        }
    }
    // length-64 weight-2 edge of the table: numeric order is (high bit, low
    // bit) lexicographic
    u64 expect = 0;
    for (int hi = 1; hi < 64; ++hi)
        for (int lo = 0; lo < hi; ++lo) {
            std::string w(64, '0');
            w[static_cast<std::size_t>(63 - hi)] = '1';
            w[static_cast<std::size_t>(63 - lo)] = '1';
            CHECK(word_rank(w) == expect);
            ++expect;
        }
    CHECK(expect == binomial64(64, 2));

    CHECK_THROWS_AS(word_rank("10x"), std::invalid_argument);
    CHECK_THROWS_AS(word_rank(std::string(65, '1')), std::invalid_argument);
}

TEST_CASE("selection cutoff: examples, extremes and the cardinality identity") {
    Real half(mpq_class(1, 2));
    CHECK(f_canonical("01", half) == 1);
    CHECK(f_canonical("10", half) == 0);

    // theta = 1 selects everything, theta = 0 nothing
    for (const std::string& w : {"", "0", "1", "0110", "11101"}) {
        CHECK(f_canonical(w, Real(mpq_class(1))) == 1);
        CHECK(f_canonical(w, Real(mpq_class(0))) == 0);
    }

    CHECK_THROWS_AS(f_canonical("1", Real(mpq_class(3, 2))), std::invalid_argument);
    CHECK_THROWS_AS(f_canonical("1", Real(mpq_class(-1, 10))), std::invalid_argument);

    // #{w of length m, weight r with f(w) = 1} = floor(C(m, r) / 3) at
    // theta = 1/3, exhaustively per shape; the trailing-1 subclass holds
    // exactly its proportional quota min(ceil(C(m-1, r-1) / 3), total)
    Real third(mpq_class(1, 3));
    for (int m = 0; m <= 12; ++m) {
        for (int r = 0; r <= m; ++r) {
            u64 selected = 0, selected_tail1 = 0;
            for (const auto& w : weighted_words(m, r)) {
                if (f_canonical(w, third) != 1) continue;
                ++selected;
                selected_tail1 += !w.empty() && w.back() == '1';
            }
            u64 total = binomial64(m, r) / 3;
            CHECK(selected == total);
            if (r >= 1) {
                u64 quota = std::min((binomial64(m - 1, r - 1) + 2) / 3, total);
                CHECK(selected_tail1 == quota);
            }
        }
    }
}

TEST_CASE("frequency sequence matches the word-level rule") {
    Real theta = Real::inv_sqrt2();
    Sequence a = theta_frequency_sequence(theta);
    CHECK(a(0) == 0);

    u64 bad = 0;
    for (u64 n = 1; n < (u64{1} << 16); ++n) {
        auto d = decompose_binary(n);
        if (a(n) != f_canonical(d.u_list.back(), theta)) ++bad;
    }
    CHECK(bad == 0);

    // high-bit inputs reach block lengths the small sweep never sees
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 4096; ++t) {
        u64 n = rng();
        if (n == 0) continue;
        auto d = decompose_binary(n);
        if (a(n) != f_canonical(d.u_list.back(), theta)) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("frequency sequence worked examples and parameter checks") {
    Sequence h = theta_frequency_sequence(Real(mpq_class(1, 2)));
    CHECK(h(6) == 0);

    Sequence one = theta_frequency_sequence(Real(mpq_class(1)));
    for (u64 n = 1; n < 2048; ++n) CHECK(one(n) == 1);
    CHECK(one(0) == 0);

    CHECK_THROWS_AS(theta_frequency_sequence(Real(mpq_class(-1, 2))), std::invalid_argument);
    CHECK_THROWS_AS(theta_frequency_sequence(Real(mpq_class(2))), std::invalid_argument);
}

TEST_CASE("doubling leaves values fixed and odd successors converge") {
    Sequence a = theta_frequency_sequence(Real(mpq_class(1, 2)));
    auto vals = eval_range(a, u64{1} << 21);

    u64 double_bad = 0;
    for (u64 n = 1; n < (u64{1} << 20); ++n)
        if (vals[n] != vals[2 * n]) ++double_bad;
    CHECK(double_bad == 0);

    // density of a_n != a_{2n+1} must fall strictly across the checkpoints
    u64 c16 = 0, c18 = 0, c20 = 0;
    for (u64 n = 0; n < (u64{1} << 20); ++n) {
        bool diff = vals[n] != a(2 * n + 1);
        c16 += diff && n < (u64{1} << 16);
        c18 += diff && n < (u64{1} << 18);
        c20 += diff;
    }
    double d16 = static_cast<double>(c16) / (u64{1} << 16);
    double d18 = static_cast<double>(c18) / (u64{1} << 18);
    double d20 = static_cast<double>(c20) / (u64{1} << 20);
    CHECK(d16 > d18);
    CHECK(d18 > d20);
}

TEST_CASE("empirical frequency of 1 tracks theta") {
    Sequence a = theta_frequency_sequence(Real::inv_sqrt2());
    u64 N = u64{1} << 20;
    auto vals = eval_range(a, N);
    u64 ones = 0;
    for (u64 n = 0; n < N; ++n) ones += vals[n];
    double freq = static_cast<double>(ones) / static_cast<double>(N);
    CHECK(std::abs(freq - 0.7071067811865476) < 0.02);
}
