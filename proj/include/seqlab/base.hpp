#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace seqlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Digits of n in base k, most significant first. n = 0 gives the empty list.
inline std::vector<int> digits_msd(u64 n, int k) {
    std::vector<int> d;
    while (n > 0) {
        d.push_back(static_cast<int>(n % static_cast<u64>(k)));
        n /= static_cast<u64>(k);
    }
    std::reverse(d.begin(), d.end());
    return d;
}

// Value of a digit word read most-significant-first.
inline u64 word_value(const std::vector<int>& w, int k) {
    u64 v = 0;
    for (int d : w) {
        if (d < 0 || d >= k) throw std::invalid_argument("digit out of range for base");
        v = v * static_cast<u64>(k) + static_cast<u64>(d);
    }
    return v;
}

// k^i with overflow detection; throws std::overflow_error past 2^63.
inline u64 checked_pow(u64 k, unsigned i) {
    u64 p = 1;
    for (unsigned j = 0; j < i; ++j) {
        if (p > (u64(1) << 62) / k) throw std::overflow_error("power exceeds index range");
        p *= k;
    }
    return p;
}

inline int popcount64(u64 n) { return __builtin_popcountll(n); }

inline mpq_class mpq_from(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Parses a decimal string ("0.70710678", "-3", "1e-3", "2.5e2") to an exact
// rational. The string is the authoritative value; no rounding occurs.
inline mpq_class mpq_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    std::string t = s;
    long expo = 0;
    std::size_t epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string etail = t.substr(epos + 1);
        if (etail.empty()) throw std::invalid_argument("malformed decimal: " + s);
        std::size_t used = 0;
        try {
            expo = std::stol(etail, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed decimal: " + s);
        }
        if (used != etail.size()) throw std::invalid_argument("malformed decimal: " + s);
        t = t.substr(0, epos);
    }
    bool neg = false;
    std::size_t pos = 0;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        pos = 1;
    }
    std::string intpart, fracpart;
    bool seen_dot = false;
    for (; pos < t.size(); ++pos) {
        char c = t[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("malformed decimal: " + s);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            (seen_dot ? fracpart : intpart).push_back(c);
        } else {
            throw std::invalid_argument("malformed decimal: " + s);
        }
    }
    if (intpart.empty() && fracpart.empty()) throw std::invalid_argument("malformed decimal: " + s);
    mpz_class num(intpart.empty() ? "0" : intpart);
    mpz_class den = 1;
    for (char c : fracpart) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    for (long e = 0; e < expo; ++e) num *= 10;
    for (long e = 0; e > expo; --e) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

}  // namespace seqlab
