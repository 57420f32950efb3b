#pragma once

// Multiplicative dependence between bases, phrased as linear algebra: a
// base k = prod p^{v_p(k)} is encoded by its exponent vector over the
// primes, and a set of bases spans a rational subspace V of exponent
// vectors. member(k) asks whether k's vector lies in V — exactly, over
// the rationals.

#include <vector>

#include <gmpxx.h>

#include "seqlab/base.hpp"

namespace seqlab {

struct BaseSpace {
    std::vector<u64> prime_support;             // sorted primes dividing some base
    std::vector<std::vector<mpq_class>> basis;  // row-echelon basis of V
    std::vector<std::size_t> pivots;            // pivot column of each basis row

    // true iff the exponent vector of k lies in V; k = 1 is the zero
    // vector and always a member
    bool member(u64 k) const;
};

BaseSpace base_closure(const std::vector<u64>& bases);

}  // namespace seqlab
