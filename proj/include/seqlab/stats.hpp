#pragma once

// Counting statistics on sequence prefixes: natural and logarithmic word
// frequencies over checkpoint ladders, subword complexity with its
// positive-frequency variant, a greedy prefix decomposition, and a shift
// invariance diagnostic.
//
// Words are written with the digit characters 0-9 then a-z, the same
// convention as kernel address words.

#include <string>
#include <vector>

#include "seqlab/kernel.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

// Natural kind: densities are count / (C - |w| + 1), exact counts of window
// starts n <= C - |w|. Logarithmic kind: densities are
// (sum of 1/(n+1) over matching starts) / log C, the 1/(n+1)-weighted form;
// at finite C this can exceed 1 by about 0.58/log C, so [0,1] only holds in
// the limit.
struct FrequencyEstimate {
    std::string word;
    bool logarithmic = false;
    std::vector<u64> checkpoints;
    std::vector<u64> counts;        // exact matches per checkpoint
    std::vector<double> densities;
};

FrequencyEstimate freq(const Sequence& a, const std::string& word, u64 N,
                       std::vector<u64> checkpoints = {});

FrequencyEstimate logfreq(const Sequence& a, const std::string& word, u64 N,
                          std::vector<u64> checkpoints = {});

// p(l): distinct windows a_[n, n+l) over starts n <= N - l.
// p_tilde(l): those whose count / (N - l + 1) is strictly above tau, with the
// same census at horizon N/2 kept for stability diagnostics.
struct ComplexityProfile {
    std::vector<int> lengths;       // 1 .. ell_max
    std::vector<u64> p;
    std::vector<u64> p_tilde;       // empty when no threshold was applied
    std::vector<u64> p_tilde_half;
    u64 horizon = 0;
    double tau = 0.0;
};

ComplexityProfile subword_complexity(const Sequence& a, int ell_max, u64 N);

ComplexityProfile asymptotic_subword_complexity(const Sequence& a, int ell_max, u64 N,
                                                double tau);

// Greedy factorization of the length-N prefix: repeatedly emit the shortest
// prefix w of the remainder whose one-symbol extension goes rare, then
// continue at the extension. A remainder prefix goes rare exactly when it
// first absorbs a window whose whole-prefix empirical frequency is below
// tau, so the scan probes the trailing probe_cap-length window at each
// position (shorter rare words make their extensions rare too). Windows are
// only probed once they fit inside the remainder, which caps boundary
// placement error at probe_cap. When no probe goes rare the remainder is
// the tail. Case dagger means no block was ever emitted (the prefix is the
// tail); double_dagger means at least one split.
struct Decomposition {
    enum class Kind { dagger, double_dagger };
    Kind kind = Kind::dagger;
    std::vector<std::string> blocks;
    std::string tail;
    std::vector<u64> boundaries;    // start index of the remainder after each block
    u64 analyzed = 0;
    double tau = 0.0;
};

Decomposition greedy_decompose(const Sequence& a, u64 N, double tau, int probe_cap = 64);

// Discrepancy of a_n against a_{n+m} with the usual three-valued verdict.
DiscrepancyReport shift_invariance(const Sequence& a, u64 m, u64 N,
                                   std::vector<u64> checkpoints = {}, double eps = 0.01);

}  // namespace seqlab
