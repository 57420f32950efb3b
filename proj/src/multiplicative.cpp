#include "seqlab/multiplicative.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "seqlab/primes.hpp"

namespace seqlab {

namespace {

cplx ipow(cplx z, int i) {
    cplx r(1.0, 0.0);
    for (int t = 0; t < i; ++t) r *= z;
    return r;
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<u64>(static_cast<u128>(r) * base % mod);
        base = static_cast<u64>(static_cast<u128>(base) * base % mod);
        exp >>= 1;
    }
    return r;
}

// e^(2*pi*i * num/den), exact on the fourth roots of unity.
cplx root_of_unity(u64 num, u64 den) {
    if (4 * num % den == 0) {
        switch (4 * num / den % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return std::polar(1.0, angle);
}

// One cyclic factor of the unit group mod q, with its discrete-log table.
struct CyclicFactor {
    u64 modulus = 1;           // the prime-power component it lives in
    u64 order = 1;
    std::vector<u64> dlog;     // indexed by n % modulus; meaningful on units only
};

// Least primitive root mod the odd prime p, lifted so it generates mod p^e.
u64 primitive_root(u64 p, int e) {
    auto factors = factorize(p - 1);
    u64 g = 2;
    for (;; ++g) {
        bool ok = true;
        for (const auto& [f, mult] : factors)
            if (pow_mod(g, (p - 1) / f, p) == 1) { ok = false; break; }
        if (ok) break;
    }
    if (e >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
    return g;
}

std::vector<CyclicFactor> unit_group_factors(u64 q) {
    std::vector<CyclicFactor> out;
    for (const auto& [p, e] : factorize(q)) {
        u64 pe = checked_pow(p, e);
        if (p == 2) {
            if (e == 1) {
                CyclicFactor f{pe, 1, std::vector<u64>(pe, 0)};
                out.push_back(std::move(f));
            } else if (e == 2) {
                CyclicFactor f{pe, 2, std::vector<u64>(pe, 0)};
                f.dlog[3] = 1;
                out.push_back(std::move(f));
            } else {
                // (Z/2^e)* = <-1> x <5>
                CyclicFactor neg{pe, 2, std::vector<u64>(pe, 0)};
                CyclicFactor five{pe, u64{1} << (e - 2), std::vector<u64>(pe, 0)};
                for (u64 s = 0; s < 2; ++s) {
                    u64 base = s == 0 ? 1 : pe - 1;
                    u64 val = base;
                    for (u64 t = 0; t < five.order; ++t) {
                        neg.dlog[val] = s;
                        five.dlog[val] = t;
                        val = static_cast<u64>(static_cast<u128>(val) * 5 % pe);
                    }
                }
                out.push_back(std::move(neg));
                out.push_back(std::move(five));
            }
        } else {
            u64 d = pe / p * (p - 1);
            u64 g = primitive_root(p, e);
            CyclicFactor f{pe, d, std::vector<u64>(pe, 0)};
            u64 val = 1;
            for (u64 t = 0; t < d; ++t) {
                f.dlog[val] = t;
                val = static_cast<u64>(static_cast<u128>(val) * g % pe);
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::string format_real(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string format_cplx(cplx z) {
    if (std::abs(z.imag()) < 1e-12) return format_real(z.real());
    std::string im = z.imag() == 1.0 ? "i" : z.imag() == -1.0 ? "-i" : format_real(z.imag()) + "i";
    if (std::abs(z.real()) < 1e-12) return im;
    return format_real(z.real()) + (z.imag() > 0 ? "+" : "") + im;
}

}  // namespace

cplx MultiplicativeSpec::at(u64 p, int i) const {
    if (complete) return ipow(prime_power(p, 1), i);
    return prime_power(p, i);
}

cplx mult_eval(const MultiplicativeSpec& spec, u64 n) {
    if (n == 0) return {0.0, 0.0};
    cplx r(1.0, 0.0);
    for (const auto& [p, e] : factorize(n)) r *= spec.at(p, e);
    return r;
}

ComplexSequence complex_sequence(const MultiplicativeSpec& spec) {
    MultiplicativeSpec copy = spec;
    return {[copy](u64 n) { return mult_eval(copy, n); }, spec.name};
}

Sequence multiplicative_sequence(const MultiplicativeSpec& spec, u64 probe) {
    return lift_to_symbols(complex_sequence(spec), probe);
}

MultiplicativeSpec mult_one() {
    MultiplicativeSpec spec;
    spec.prime_power = [](u64, int) { return cplx(1.0, 0.0); };
    spec.complete = true;
    spec.name = "one";
    return spec;
}

MultiplicativeSpec mobius() {
    MultiplicativeSpec spec;
    spec.prime_power = [](u64, int i) { return cplx(i == 1 ? -1.0 : 0.0, 0.0); };
    spec.complete = false;
    spec.name = "mobius";
    return spec;
}

MultiplicativeSpec liouville() {
    MultiplicativeSpec spec;
    spec.prime_power = [](u64, int) { return cplx(-1.0, 0.0); };
    spec.complete = true;
    spec.name = "liouville";
    return spec;
}

MultiplicativeSpec dirichlet_character(u64 q, u64 index) {
    if (q == 0) throw std::invalid_argument("character modulus must be positive");
    auto factors = unit_group_factors(q);
    u64 phi = 1;
    for (const auto& f : factors) phi *= f.order;
    if (index >= phi)
        throw std::invalid_argument("character index must be below phi(" + std::to_string(q) +
                                    ") = " + std::to_string(phi));
    std::vector<u64> exponents;
    u64 rest = index;
    for (const auto& f : factors) {
        exponents.push_back(rest % f.order);
        rest /= f.order;
    }
    u64 den = 1;
    for (const auto& f : factors) den = std::lcm(den, f.order);

    auto table = std::make_shared<std::vector<cplx>>(q);
    for (u64 n = 0; n < q; ++n) {
        if (std::gcd(n, q) != 1) {
            (*table)[n] = {0.0, 0.0};
            continue;
        }
        u64 num = 0;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            u64 t = factors[j].dlog[n % factors[j].modulus];
            u64 r = static_cast<u64>(static_cast<u128>(exponents[j]) * t % factors[j].order);
            num = (num + r * (den / factors[j].order)) % den;
        }
        (*table)[n] = root_of_unity(num, den);
    }

    MultiplicativeSpec spec;
    spec.prime_power = [table, q](u64 p, int) { return (*table)[p % q]; };
    spec.complete = true;
    spec.name = "chi(" + std::to_string(q) + "," + std::to_string(index) + ")";
    return spec;
}

ComplexSequence klm_form(u64 p, std::vector<cplx> b, std::vector<cplx> c) {
    if (!is_prime(p)) throw std::invalid_argument("klm_form requires a prime p");
    if (b.empty() || c.empty()) throw std::invalid_argument("klm_form periods must be nonempty");
    auto bp = std::make_shared<std::vector<cplx>>(std::move(b));
    auto cp = std::make_shared<std::vector<cplx>>(std::move(c));
    auto eval = [p, bp, cp](u64 n) -> cplx {
        if (n == 0) return {0.0, 0.0};
        u64 i = 0;
        while (n % p == 0) {
            n /= p;
            ++i;
        }
        return (*cp)[i % cp->size()] * (*bp)[n % bp->size()];
    };
    return {std::move(eval), "klm-form(p=" + std::to_string(p) + ")"};
}

MultiplicativeSpec p_local(const MultiplicativeSpec& a, u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("p_local requires a prime p");
    MultiplicativeSpec spec;
    MultiplicativeSpec base = a;
    spec.prime_power = [base, p](u64 r, int i) {
        return r == p ? base.at(p, i) : cplx(1.0, 0.0);
    };
    spec.complete = a.complete;
    spec.name = a.name + "-local(" + std::to_string(p) + ")";
    return spec;
}

MultiplicativeSpec p_local_companion(const MultiplicativeSpec& a, u64 p) {
    MultiplicativeSpec local = p_local(a, p);
    MultiplicativeSpec spec;
    spec.prime_power = [local](u64 r, int i) {
        double m = std::abs(local.prime_power(r, i));
        return cplx(m * m, 0.0);
    };
    spec.complete = a.complete;
    spec.name = a.name + "-companion(" + std::to_string(p) + ")";
    return spec;
}

double mult_distance(const MultiplicativeSpec& a, const MultiplicativeSpec& b, u64 P) {
    double sum = 0.0;
    for (u64 p : primes_up_to(P)) {
        cplx ap = a.at(p, 1);
        cplx bp = b.at(p, 1);
        if (std::abs(ap) > 1.0 + 1e-12 || std::abs(bp) > 1.0 + 1e-12)
            throw std::invalid_argument("mult_distance requires 1-bounded values on primes");
        sum += (1.0 - (ap * std::conj(bp)).real()) / static_cast<double>(p);
    }
    return std::sqrt(std::max(sum, 0.0));
}

Sequence lift_to_symbols(const ComplexSequence& seq, u64 probe) {
    if (probe == 0) throw std::invalid_argument("probe range must be positive");
    constexpr double kTol = 1e-9;
    std::vector<cplx> reps;
    for (u64 n = 0; n < probe; ++n) {
        cplx v = seq.eval(n);
        bool seen = false;
        for (const cplx& r : reps)
            if (std::abs(v - r) <= kTol) { seen = true; break; }
        if (!seen) reps.push_back(v);
    }
    std::sort(reps.begin(), reps.end(), [](const cplx& x, const cplx& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    std::vector<std::string> labels;
    for (const cplx& r : reps) labels.push_back(format_cplx(r));
    Alphabet alpha(static_cast<int>(reps.size()), std::move(labels));

    auto reps_p = std::make_shared<std::vector<cplx>>(std::move(reps));
    auto inner = seq.eval;
    auto eval = [inner, reps_p](u64 n) -> Symbol {
        cplx v = inner(n);
        for (std::size_t s = 0; s < reps_p->size(); ++s)
            if (std::abs(v - (*reps_p)[s]) <= kTol) return static_cast<Symbol>(s);
        throw std::domain_error("value outside the probed alphabet at index " + std::to_string(n));
    };
    return Sequence(alpha, std::move(eval), seq.name);
}

}  // namespace seqlab
