#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "seqlab/base.hpp"

namespace seqlab {

// Exact sum of 1/j over a < j <= b, by binary splitting. Kept unreduced in
// (numerator, denominator) pairs internally and canonicalized once.
mpq_class harmonic_range_exact(u64 a, u64 b);

// Exact sum of 1/d over an arbitrary list of positive denominators.
mpq_class unit_fraction_sum(const std::vector<u64>& denominators);

// Exact sum of 1/j over a union of half-open ranges (a, b], with the work
// tree balanced across ranges so one huge range does not dominate the
// intermediate sizes.
mpq_class harmonic_ranges_exact(const std::vector<std::pair<u64, u64>>& ranges);

// Certified enclosure [lo, hi] containing H_x = sum_{j=1}^{x} 1/j.
// Small x is summed exactly (lo == hi); large x uses the asymptotic expansion
//   H_x = ln x + gamma + 1/(2x) - 1/(12x^2) + 1/(120x^4) - r,  0 < r < 1/(252 x^6)
// with every operation rounded outward. Bounds are binary floats returned
// exactly as rationals, so downstream arithmetic can stay rational.
std::pair<mpq_class, mpq_class> harmonic_enclosure(const mpz_class& x, int prec_bits = 256);

}  // namespace seqlab
