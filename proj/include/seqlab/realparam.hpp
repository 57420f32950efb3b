#pragma once

// Exact real parameters of the form a + b*sqrt(d) with a, b rational and d a
// non-square non-negative integer (b = 0 or d = 0 gives plain rationals).
// Floors, comparisons and arithmetic with rationals are exact, so floor-based
// sequence definitions never misclassify boundary cases.

#include <optional>
#include <string>

#include "seqlab/base.hpp"

namespace seqlab {

class Real {
  public:
    Real() : a_(0), b_(0), d_(0) {}
    Real(const mpq_class& a) : a_(a), b_(0), d_(0) {}
    Real(long n) : a_(n), b_(0), d_(0) {}
    Real(const mpq_class& a, const mpq_class& b, unsigned long d);

    static Real from_decimal(const std::string& s) { return Real(mpq_from_decimal(s)); }
    static Real sqrt_of(unsigned long d) { return Real(0, 1, d); }
    // (sqrt(5) - 1) / 2
    static Real golden() { return Real(mpq_class(-1, 2), mpq_class(1, 2), 5); }
    // 1/sqrt(2) = sqrt(2)/2
    static Real inv_sqrt2() { return Real(0, mpq_class(1, 2), 2); }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& radical_coeff() const { return b_; }
    unsigned long radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    Real operator+(const Real& o) const;
    Real operator-(const Real& o) const;
    Real operator*(const mpq_class& q) const { return Real(a_ * q, b_ * q, d_); }
    Real operator+(const mpq_class& q) const { return Real(a_ + q, b_, d_); }

    // sign of (a + b sqrt(d)), exact
    int sign() const;
    int compare(const Real& o) const;
    int compare(const mpq_class& q) const;
    bool operator<(const Real& o) const { return compare(o) < 0; }
    bool operator==(const Real& o) const { return compare(o) == 0; }

    // exact floor / ceil of the value
    mpz_class floor() const;
    mpz_class ceil() const;

    double to_double() const;
    std::string describe() const;

  private:
    mpq_class a_, b_;
    unsigned long d_;  // 0 when the value is rational
};

// floor(x * n + y) for integer n, exact.
mpz_class floor_linear(const Real& x, u64 n, const Real& y);
mpz_class ceil_linear(const Real& x, u64 n, const Real& y);

}  // namespace seqlab
