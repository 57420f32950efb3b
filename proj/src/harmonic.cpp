#include "seqlab/harmonic.hpp"

#include <stdexcept>

#include <mpfr.h>

namespace seqlab {

namespace {

// num/den (not reduced) of sum_{j=lo}^{hi} 1/j
void range_sum(u64 lo, u64 hi, mpz_class& num, mpz_class& den) {
    if (hi - lo < 32) {
        num = 0;
        den = 1;
        for (u64 j = lo; j <= hi; ++j) {
            num = num * j + den;
            den *= j;
        }
        return;
    }
    u64 mid = lo + (hi - lo) / 2;
    mpz_class n1, d1, n2, d2;
    range_sum(lo, mid, n1, d1);
    range_sum(mid + 1, hi, n2, d2);
    num = n1 * d2 + n2 * d1;
    den = d1 * d2;
}

void list_sum(const std::vector<u64>& d, std::size_t lo, std::size_t hi, mpz_class& num,
              mpz_class& den) {
    if (hi - lo < 32) {
        num = 0;
        den = 1;
        for (std::size_t i = lo; i < hi; ++i) {
            num = num * d[i] + den;
            den *= d[i];
        }
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    mpz_class n1, d1, n2, d2;
    list_sum(d, lo, mid, n1, d1);
    list_sum(d, mid, hi, n2, d2);
    num = n1 * d2 + n2 * d1;
    den = d1 * d2;
}

}  // namespace

mpq_class harmonic_range_exact(u64 a, u64 b) {
    if (a > b) throw std::invalid_argument("harmonic range reversed");
    if (a == b) return mpq_class(0);
    mpz_class num, den;
    range_sum(a + 1, b, num, den);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class unit_fraction_sum(const std::vector<u64>& denominators) {
    for (u64 d : denominators)
        if (d == 0) throw std::invalid_argument("zero denominator");
    if (denominators.empty()) return mpq_class(0);
    mpz_class num, den;
    list_sum(denominators, 0, denominators.size(), num, den);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class harmonic_ranges_exact(const std::vector<std::pair<u64, u64>>& ranges) {
    // split into bounded chunks, then reduce pairwise so the tree stays balanced
    constexpr u64 kChunkTerms = u64(1) << 18;
    std::vector<mpq_class> parts;
    for (auto [a, b] : ranges) {
        if (a > b) throw std::invalid_argument("harmonic range reversed");
        for (u64 lo = a; lo < b;) {
            u64 hi = (b - lo > kChunkTerms) ? lo + kChunkTerms : b;
            parts.push_back(harmonic_range_exact(lo, hi));
            lo = hi;
        }
    }
    if (parts.empty()) return mpq_class(0);
    while (parts.size() > 1) {
        std::vector<mpq_class> next;
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
        if (parts.size() % 2) next.push_back(parts.back());
        parts = std::move(next);
    }
    return parts[0];
}

std::pair<mpq_class, mpq_class> harmonic_enclosure(const mpz_class& x, int prec_bits) {
    if (x <= 0) throw std::invalid_argument("harmonic enclosure needs x >= 1");
    if (x <= 100000) {
        mpq_class h = harmonic_range_exact(0, x.get_ui());
        return {h, h};
    }

    mpfr_t lo, hi, t, u;
    mpfr_inits2(prec_bits, lo, hi, t, u, static_cast<mpfr_ptr>(nullptr));

    mpz_class x2 = x * x;
    mpz_class x4 = x2 * x2;
    mpz_class m2 = 2 * x;
    mpz_class m12 = 12 * x2;
    mpz_class m120 = 120 * x4;
    mpz_class m252 = 252 * x4 * x2;

    // ln x
    mpfr_set_z(t, x.get_mpz_t(), MPFR_RNDD);
    mpfr_log(lo, t, MPFR_RNDD);
    mpfr_set_z(t, x.get_mpz_t(), MPFR_RNDU);
    mpfr_log(hi, t, MPFR_RNDU);
    // + gamma
    mpfr_const_euler(t, MPFR_RNDD);
    mpfr_add(lo, lo, t, MPFR_RNDD);
    mpfr_const_euler(t, MPFR_RNDU);
    mpfr_add(hi, hi, t, MPFR_RNDU);
    // + 1/(2x)
    mpfr_set_z(t, m2.get_mpz_t(), MPFR_RNDU);
    mpfr_ui_div(u, 1, t, MPFR_RNDD);
    mpfr_add(lo, lo, u, MPFR_RNDD);
    mpfr_set_z(t, m2.get_mpz_t(), MPFR_RNDD);
    mpfr_ui_div(u, 1, t, MPFR_RNDU);
    mpfr_add(hi, hi, u, MPFR_RNDU);
    // - 1/(12x^2)
    mpfr_set_z(t, m12.get_mpz_t(), MPFR_RNDD);
    mpfr_ui_div(u, 1, t, MPFR_RNDU);
    mpfr_sub(lo, lo, u, MPFR_RNDD);
    mpfr_set_z(t, m12.get_mpz_t(), MPFR_RNDU);
    mpfr_ui_div(u, 1, t, MPFR_RNDD);
    mpfr_sub(hi, hi, u, MPFR_RNDU);
    // + 1/(120x^4)
    mpfr_set_z(t, m120.get_mpz_t(), MPFR_RNDU);
    mpfr_ui_div(u, 1, t, MPFR_RNDD);
    mpfr_add(lo, lo, u, MPFR_RNDD);
    mpfr_set_z(t, m120.get_mpz_t(), MPFR_RNDD);
    mpfr_ui_div(u, 1, t, MPFR_RNDU);
    mpfr_add(hi, hi, u, MPFR_RNDU);
    // - r with 0 < r < 1/(252 x^6): only the lower bound pays it
    mpfr_set_z(t, m252.get_mpz_t(), MPFR_RNDD);
    mpfr_ui_div(u, 1, t, MPFR_RNDU);
    mpfr_sub(lo, lo, u, MPFR_RNDD);

    mpq_class qlo, qhi;
    mpfr_get_q(qlo.get_mpq_t(), lo);
    mpfr_get_q(qhi.get_mpq_t(), hi);
    mpfr_clears(lo, hi, t, u, static_cast<mpfr_ptr>(nullptr));
    return {qlo, qhi};
}

}  // namespace seqlab
