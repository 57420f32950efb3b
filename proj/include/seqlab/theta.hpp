#pragma once

// Binary sequences with a prescribed symbol frequency, driven by a canonical
// selection rule on weighted words. The binary expansion of n is split into
// blocks holding 1, 2, ..., r ones; a_n depends only on the final block, and
// per-shape cutoffs make symbol 1 appear with asymptotic frequency theta
// while a_{2n} = a_n holds exactly.

#include <string>
#include <vector>

#include "seqlab/base.hpp"
#include "seqlab/realparam.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

struct BinaryDecomposition {
    int r = 0;                        // number of u-blocks
    std::vector<std::string> u_list;  // u_list[i-1] has exactly i ones and ends in 1
    std::string v;                    // suffix holding at most r ones
};

// Split (n)_2 = u^(1) ... u^(r) v, where u^(i) ends in 1 and carries exactly
// i ones, and v carries at most r ones. r is the unique integer with
// r(r+1)/2 <= s_2(n) <= r(r+1)/2 + r. n = 0 gives the empty decomposition.
BinaryDecomposition decompose_binary(u64 n);

// C(n, k) for 0 <= n <= 64 (0 when k < 0 or k > n); all values fit in 64 bits.
u64 binomial64(int n, int k);

// 0-based position of w among binary words of the same length and weight,
// ordered by numeric value; combinatorial ranking, no enumeration.
u64 word_rank(const std::string& w);

// Canonical selection with density theta. Exactly floor(theta * C(m, r)) of
// the weight-r length-m words are selected, and the quota is split between
// the words ending in 1 and the words ending in 0 in proportion to their
// counts: the trailing-1 subclass receives min(ceil(theta * C(m-1, r-1)),
// floor(theta * C(m, r))) slots and the trailing-0 subclass the rest, each
// filled in increasing numeric order. Proportional fill of the trailing-1
// subclass is what makes the sequence below hit frequency theta: final
// u-blocks always end in 1, so a selection skewed across that split would
// bias the sequence even though the per-shape totals are unchanged.
int f_canonical(const std::string& w, const Real& theta);

// a_0 = 0; a_n = f_canonical(u^(r), theta) on the final u-block of n.
// Appending a 0 to n only extends v, so a_{2n} = a_n for every n >= 1.
Sequence theta_frequency_sequence(const Real& theta);

}  // namespace seqlab
