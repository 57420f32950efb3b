// Engine for k-regular sequences: exact linear representations, the
// digit-shift operators Lambda_u, rational kernel rank, linear-recurrence
// detection, per-digit invertibility over prime fields, and the fast-growth
// construction on the 3-smooth interval ladder.
//
// Value-level work happens over exact rationals: symbol sequences embed via
// values_of / signed_values_of, and unbounded constructions (fast growth)
// never touch a finite alphabet.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "seqlab/sequence.hpp"

namespace seqlab {

// Rational-valued sequence: eval must be pure (same n, same value).
struct ValueSequence {
    std::function<mpq_class(u64)> eval;
    std::string name;
};

// Symbols read as their integer values.
ValueSequence values_of(const Sequence& a);

// Binary symbols read as 0 -> +1, 1 -> -1.
ValueSequence signed_values_of(const Sequence& a);

std::vector<mpq_class> eval_values(const ValueSequence& a, u64 N);

enum class ScalarField { rationals, prime_field };

// a_n = lambda . M_{d_1} ... M_{d_m} . gamma over n's base-k digits,
// most significant first; a_0 = lambda . gamma. Matrices act on row vectors
// from the right and are stored row-major.
struct LinearRepresentation {
    int dimension = 0;
    u64 k = 2;
    std::vector<mpq_class> lambda;               // 1 x D
    std::vector<std::vector<mpq_class>> mats;    // k matrices, D*D row-major
    std::vector<mpq_class> gamma;                // D x 1
    ScalarField field = ScalarField::rationals;
    u64 modulus = 0;                             // prime, when field is prime_field

    void validate() const;
};

mpq_class linrep_eval(const LinearRepresentation& rep, u64 n);

ValueSequence linrep_sequence(const LinearRepresentation& rep);

// Built-in representations over the rationals.
LinearRepresentation binary_digit_sum_representation();  // a_n = popcount(n)
LinearRepresentation identity_representation();          // a_n = n
LinearRepresentation constant_representation(const mpq_class& c, u64 k);

// The digit-shift operator: lambda_op(u, a)_n = a_{k^{|u|} n + [u]_k} where
// u is a base-k digit word (digits 0-9a-z) read with its FIRST letter as the
// least significant digit, so that words compose by concatenation:
// lambda_op(uv) = lambda_op(v) after lambda_op(u). On a representation this
// sets gamma' = M_{u_L} ... M_{u_1} gamma (first letter applied first); the
// result evaluates leading-zero-padded digit strings, so it agrees with the
// sequence-level operator exactly when lambda M_0 = lambda (true of all
// built-in representations).
ValueSequence lambda_op(const std::string& u, const ValueSequence& a, u64 k);
LinearRepresentation lambda_op(const std::string& u, const LinearRepresentation& rep);
Sequence lambda_op(const std::string& u, const Sequence& a, u64 k);

// Exact rational rank of the matrix whose rows are the truncated kernel
// elements (a_{k^i n + r})_{n < N} for 0 <= i <= depth, 0 <= r < k^i.
// rank_at_half repeats the computation at horizon N/2: agreement is the
// N-sensitivity signal (a horizon too small to separate rows shows up as a
// rank that moves with N).
struct KernelRankReport {
    int rank = 0;
    int rank_at_half = 0;
    bool stable = false;  // rank == rank_at_half
    int depth = 0;
    u64 horizon = 0;
};

KernelRankReport kernel_rank(const ValueSequence& a, u64 k, int depth, u64 N);

// a_{n+d} = t_1 a_{n+d-1} + ... + t_d a_n, re-verified on [0, N-d).
struct RecurrenceWitness {
    int d = 0;
    std::vector<mpq_class> coeffs;  // t_1 .. t_d
    u64 horizon = 0;
    u64 violations = 0;
};

// Smallest order d <= d_max whose coefficient system is exactly solvable
// over the whole prefix, with a verification pass (always zero violations).
// Returns nothing when no order works.
std::optional<RecurrenceWitness> detect_linear_recurrence(const ValueSequence& a,
                                                          u64 N, int d_max);

// Almost-everywhere variant: coefficients are fitted on a tail window (where
// an eventually-valid recurrence has settled), then violations are counted
// over the whole prefix; the smallest order whose violation density is at
// most max_density wins. Reports measurements only - a positive density is
// never asserted to vanish asymptotically.
std::optional<RecurrenceWitness> detect_linear_recurrence_ae(const ValueSequence& a,
                                                             u64 N, int d_max,
                                                             double max_density);

// det(M_i) mod p for each digit matrix of a prime-field representation.
struct InvertibilityReport {
    std::vector<u64> determinants;  // residues mod p
    std::vector<bool> invertible;
    bool all_invertible = false;
};

InvertibilityReport invertibility_check(const LinearRepresentation& rep);

// a_n = F(beta_i) for n in [H_i, H_{i+1}) on the 3-smooth ladder
// H_i = 2^alpha_i 3^beta_i (a_0 joins the first interval). F must be
// non-decreasing; this is spot-checked on the first values. Values are
// unbounded integers.
ValueSequence fast_growth_sequence(std::function<mpz_class(u64)> F);

// Pointwise max(a_n, floor(f(n))): the patch step that upgrades an
// almost-everywhere growth bound to an everywhere bound while staying
// asymptotically equal to a.
ValueSequence max_patch(const ValueSequence& a, std::function<mpz_class(u64)> f);

}  // namespace seqlab
