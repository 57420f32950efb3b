#include "seqlab/realparam.hpp"

#include <cmath>

namespace seqlab {

namespace {

bool is_square(unsigned long d, unsigned long* root) {
    mpz_class z(static_cast<unsigned long>(d));
    mpz_class r = sqrt(z);
    if (r * r == z) {
        if (root) *root = r.get_ui();
        return true;
    }
    return false;
}

// sign of (q - c*sqrt(d)) for rational q, c >= 0, exact
int cmp_rational_vs_radical(const mpq_class& q, const mpq_class& c, unsigned long d) {
    if (c == 0 || d == 0) return sgn(q);
    if (q <= 0) return q == 0 && c == 0 ? 0 : -1;
    // q, c > 0: compare q^2 vs c^2 d
    mpq_class lhs = q * q;
    mpq_class rhs = c * c * mpq_class(static_cast<unsigned long>(d));
    return cmp(lhs, rhs);
}

}  // namespace

Real::Real(const mpq_class& a, const mpq_class& b, unsigned long d) : a_(a), b_(b), d_(d) {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    unsigned long root;
    if (d_ == 0) {
        b_ = 0;
        return;
    }
    if (is_square(d_, &root)) {
        a_ += b_ * mpq_class(root);
        b_ = 0;
        d_ = 0;
    }
}

int Real::sign() const {
    if (b_ == 0) return sgn(a_);
    if (b_ > 0) return -cmp_rational_vs_radical(-a_, b_, d_);
    return cmp_rational_vs_radical(a_, -b_, d_);
}

int Real::compare(const Real& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw std::invalid_argument("comparing radicals over different radicands");
    unsigned long d = d_ != 0 ? d_ : o.d_;
    Real diff(a_ - o.a_, b_ - o.b_, d);
    return diff.sign();
}

int Real::compare(const mpq_class& q) const { return Real(a_ - q, b_, d_).sign(); }

Real Real::operator+(const Real& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw std::invalid_argument("mixing radicals over different radicands");
    unsigned long d = d_ != 0 ? d_ : o.d_;
    return Real(a_ + o.a_, b_ + o.b_, d);
}

Real Real::operator-(const Real& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw std::invalid_argument("mixing radicals over different radicands");
    unsigned long d = d_ != 0 ? d_ : o.d_;
    return Real(a_ - o.a_, b_ - o.b_, d);
}

mpz_class Real::floor() const {
    if (b_ == 0) {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
        return f;
    }
    // Write the value as (A + B sqrt(d)) / C with integer A, B, C > 0 and
    // seed from the integer square root; at most one correction step needed.
    mpz_class A = a_.get_num() * b_.get_den();
    mpz_class B = b_.get_num() * a_.get_den();
    mpz_class C = a_.get_den() * b_.get_den();
    mpz_class s = sqrt(B * B * mpz_class(d_));
    mpz_class f;
    if (B >= 0)
        mpz_fdiv_q(f.get_mpz_t(), mpz_class(A + s).get_mpz_t(), C.get_mpz_t());
    else
        mpz_fdiv_q(f.get_mpz_t(), mpz_class(A - s - 1).get_mpz_t(), C.get_mpz_t());
    while (compare(mpq_class(f)) < 0) f -= 1;
    while (compare(mpq_class(f + 1)) >= 0) f += 1;
    return f;
}

mpz_class Real::ceil() const {
    mpz_class f = floor();
    return compare(mpq_class(f)) == 0 ? f : f + 1;
}

double Real::to_double() const {
    double v = a_.get_d();
    if (b_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

std::string Real::describe() const {
    std::string s = a_.get_str();
    if (b_ != 0) s += " + (" + b_.get_str() + ")*sqrt(" + std::to_string(d_) + ")";
    return s;
}

mpz_class floor_linear(const Real& x, u64 n, const Real& y) {
    mpq_class nn(mpz_class(static_cast<unsigned long>(n)));
    return (x * nn + y).floor();
}

mpz_class ceil_linear(const Real& x, u64 n, const Real& y) {
    mpq_class nn(mpz_class(static_cast<unsigned long>(n)));
    return (x * nn + y).ceil();
}

}  // namespace seqlab
