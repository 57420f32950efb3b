#pragma once

// Deterministic finite automata with output, reading base-k digits most
// significant first. a_n = tau(delta*(q0, digits of n)); the empty expansion
// of n = 0 yields tau(q0).

#include <string>
#include <vector>

#include "seqlab/sequence.hpp"

namespace seqlab {

struct DFAO {
    int k = 2;                 // digit base
    int states = 1;            // Q
    std::vector<int> delta;    // states x k, row-major: delta[q * k + d]
    int q0 = 0;
    std::vector<Symbol> tau;   // output per state
    int alphabet_size = 2;
    std::string name;

    int step(int q, int d) const { return delta[static_cast<std::size_t>(q) * k + d]; }
    void validate() const;
    Symbol output(u64 n) const;
    int state_at(u64 n) const;
};

Sequence dfao_sequence(const DFAO& m, int k);

// Built-in automata.
DFAO thue_morse_dfao();          // s_2(n) mod 2, kernel size 2
DFAO period_doubling_dfao();     // parity of the trailing run of ones, kernel size 4
DFAO rudin_shapiro_dfao();       // parity of occurrences of "11", kernel size 4
DFAO constant_dfao();            // single state, kernel size 1
DFAO digit_sum_base3_dfao();     // s_3(n) mod 2, kernel size 2

const std::vector<DFAO>& builtin_dfaos();

}  // namespace seqlab
