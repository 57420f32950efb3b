#include "seqlab/primes.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace seqlab {

namespace {

constexpr u64 kSpfLimit = u64{1} << 21;

// smallest-prime-factor table for the fast path
using u32 = std::uint32_t;

const std::vector<u32>& spf_table() {
    static const std::vector<u32> table = [] {
        std::vector<u32> t(kSpfLimit, 0);
        for (u64 i = 2; i < kSpfLimit; ++i) {
            if (t[i] != 0) continue;
            for (u64 j = i; j < kSpfLimit; j += i)
                if (t[j] == 0) t[j] = static_cast<u32>(i);
        }
        return t;
    }();
    return table;
}

}  // namespace

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("cannot factorize 0");
    std::vector<std::pair<u64, int>> out;
    if (n < kSpfLimit) {
        const auto& spf = spf_table();
        while (n > 1) {
            u64 p = spf[n];
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.push_back({p, e});
        }
        return out;
    }
    for (u64 d = 2; d * d <= n; d += d == 2 ? 1 : 2) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

u64 totient(u64 n) {
    u64 phi = 1;
    for (auto [p, e] : factorize(n)) {
        u64 pe = 1;
        for (int i = 0; i < e - 1; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

}  // namespace seqlab
