#pragma once

// Prime enumeration and integer factorization helpers shared by the
// multiplicative generators and distance diagnostics.

#include <utility>
#include <vector>

#include "seqlab/base.hpp"

namespace seqlab {

// ascending primes <= limit
std::vector<u64> primes_up_to(u64 limit);

// (prime, exponent) pairs in increasing prime order; n >= 1
std::vector<std::pair<u64, int>> factorize(u64 n);

bool is_prime(u64 n);

// Euler totient
u64 totient(u64 n);

}  // namespace seqlab
