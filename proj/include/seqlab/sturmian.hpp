#pragma once

// Bracket sequences: first differences of floors (or ceilings) of an
// arithmetic progression, evaluated exactly so boundary cases never
// misclassify, plus the block-patched variant whose intercept changes on a
// vanishing set of indices.

#include <vector>

#include "seqlab/base.hpp"
#include "seqlab/realparam.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

enum class BracketMode { floor_diff, ceil_diff };

// a_n = floor(theta(n+1) + rho) - floor(theta n + rho), or the ceiling
// variant; values in {0,1}. Requires theta in (0,1) and rho in [0,1).
Sequence sturmian(const Real& theta, const Real& rho, BracketMode mode = BracketMode::floor_diff);

// Concatenated bracket blocks sharing one slope: block j spans
// block_lengths[j] indices and uses intercept rho_list[j]; the final block
// extends to infinity. Block lengths must be strictly increasing so the
// boundary set has density zero.
Sequence patched_sturmian(const Real& theta, const std::vector<Real>& rho_list,
                          const std::vector<u64>& block_lengths);

// a_n = floor(alpha n + beta) mod m over the alphabet {0, ..., m-1}.
Sequence bracket_floor_mod(const Real& alpha, const Real& beta, int m);

}  // namespace seqlab
