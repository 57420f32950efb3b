#pragma once

// Multiplicative sequences described by their values on prime powers.
//
// A spec stores a_{p^i} (with a completely-multiplicative flag collapsing
// this to values on primes, a_{p^i} = a_p^i) and extends to all of N by
// gcd-multiplicativity: a_n = prod a_{p^e} over the factorization of n.
// Conventions: a_0 = 0, a_1 = 1 (empty product).
//
// The distance between two 1-bounded multiplicative sequences is
//     D(a,b)^2 = sum_{p <= P} (1 - Re(a_p conj(b_p))) / p,
// computed by exact prime enumeration up to the cutoff P.

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "seqlab/base.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

using cplx = std::complex<double>;

// A complex-valued arithmetic function evaluated pointwise.
struct ComplexSequence {
    std::function<cplx(u64)> eval;
    std::string name;
};

struct MultiplicativeSpec {
    // a_{p^i} for p prime, i >= 1. When complete is set, only i = 1 is
    // consulted and higher powers collapse to a_p^i.
    std::function<cplx(u64 p, int i)> prime_power;
    bool complete = false;
    std::string name;

    cplx at(u64 p, int i) const;
};

// a_n by factorization; a_0 = 0, a_1 = 1.
cplx mult_eval(const MultiplicativeSpec& spec, u64 n);

ComplexSequence complex_sequence(const MultiplicativeSpec& spec);

// Snaps the spec's values onto a finite symbol alphabet (see lift_to_symbols).
Sequence multiplicative_sequence(const MultiplicativeSpec& spec, u64 probe = 4096);

// Built-ins.
MultiplicativeSpec mult_one();
MultiplicativeSpec mobius();
MultiplicativeSpec liouville();

// Dirichlet character mod q, indexed 0 <= index < phi(q) in the mixed-radix
// order over the cyclic factors of the unit group; index 0 is principal.
MultiplicativeSpec dirichlet_character(u64 q, u64 index);

// a_{p^i m} = c_i b_m for p not dividing m, with b and c periodic
// (indexed modulo their lengths); a_0 = 0.
ComplexSequence klm_form(u64 p, std::vector<cplx> b, std::vector<cplx> c);

// The p-local part a^(p): agrees with a on powers of p, equals 1 on all
// prime powers r^i with r != p.  The companion is c^(p)_n = |a^(p)_n|^2.
MultiplicativeSpec p_local(const MultiplicativeSpec& a, u64 p);
MultiplicativeSpec p_local_companion(const MultiplicativeSpec& a, u64 p);

// D(a,b) truncated at the prime cutoff P; rejects values with |a_p| > 1.
double mult_distance(const MultiplicativeSpec& a, const MultiplicativeSpec& b, u64 P);

// Probes eval on [0, probe), collects the distinct values (tolerance 1e-9),
// orders them by (re, im) and returns the symbol sequence over that
// alphabet.  Evaluation outside the probed value set is a domain error.
Sequence lift_to_symbols(const ComplexSequence& seq, u64 probe = 4096);

}  // namespace seqlab
