#pragma once

#include <vector>

#include "seqlab/base.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

struct SmoothEntry {
    u64 value;
    int alpha;  // exponent of 2
    int beta;   // exponent of 3
};

// All 2^a 3^b <= limit, in increasing order.
std::vector<SmoothEntry> smooth_enumeration(u64 limit);

// The full table over the 64-bit index range (about 1300 entries), built once.
const std::vector<SmoothEntry>& smooth_table_u64();

// Index i of the interval [H_i, H_{i+1}) containing n; requires n >= 1.
std::size_t smooth_interval_index(u64 n);

struct SmoothSchedule {
    std::vector<long> gamma;  // strictly increasing, gamma.front() == 0

    void validate() const;
    // Window index j with gamma_j <= beta < gamma_{j+1}; beta past the last
    // cutoff maps to the last window.
    int window_index(long beta) const;
    int parity(long beta) const { return window_index(beta) & 1; }
};

// a_0 = 0; a_n = parity of the window holding beta_i, for n in [H_i, H_{i+1}).
Sequence smooth_parity_sequence(const SmoothSchedule& sched);

}  // namespace seqlab
