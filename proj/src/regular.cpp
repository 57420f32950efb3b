#include "seqlab/regular.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>

#include "seqlab/kernel.hpp"
#include "seqlab/parallel.hpp"
#include "seqlab/primes.hpp"
#include "seqlab/smooth.hpp"

namespace seqlab {

namespace {

int digit_of(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

std::vector<int> parse_digits(const std::string& u, u64 k) {
    if (k < 2 || k > 36) throw std::invalid_argument("base must be between 2 and 36");
    std::vector<int> out;
    out.reserve(u.size());
    for (char c : u) {
        int d = digit_of(c);
        if (d < 0 || static_cast<u64>(d) >= k)
            throw std::invalid_argument("digit out of range for base");
        out.push_back(d);
    }
    return out;
}

// [u]_k with the word's first letter as the least significant digit.
u64 digits_value(const std::vector<int>& ds, u64 k) {
    u64 v = 0;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
        if (v > (std::numeric_limits<u64>::max() - static_cast<u64>(*it)) / k)
            throw std::overflow_error("digit word exceeds the index range");
        v = v * k + static_cast<u64>(*it);
    }
    return v;
}

void reduce_mod(mpq_class& x, u64 p) {
    mpz_class m(static_cast<unsigned long>(p));
    mpz_class r = x.get_num() % m;
    if (r < 0) r += m;
    x = mpq_class(r);
}

// row vector times row-major D x D matrix
std::vector<mpq_class> row_times(const std::vector<mpq_class>& v,
                                 const std::vector<mpq_class>& m, int D) {
    std::vector<mpq_class> out(static_cast<std::size_t>(D), mpq_class(0));
    for (int i = 0; i < D; ++i) {
        if (v[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < D; ++j)
            out[static_cast<std::size_t>(j)] +=
                v[static_cast<std::size_t>(i)] *
                m[static_cast<std::size_t>(i * D + j)];
    }
    return out;
}

std::vector<mpq_class> mat_times_col(const std::vector<mpq_class>& m,
                                     const std::vector<mpq_class>& v, int D) {
    std::vector<mpq_class> out(static_cast<std::size_t>(D), mpq_class(0));
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            out[static_cast<std::size_t>(i)] +=
                m[static_cast<std::size_t>(i * D + j)] * v[static_cast<std::size_t>(j)];
    return out;
}

// Reduced row-echelon accumulator over the rationals.
struct RrefBasis {
    std::size_t width;
    std::vector<std::vector<mpq_class>> rows;  // pivot entry 1, pivot cols clear elsewhere
    std::vector<std::size_t> pivots;           // ascending

    explicit RrefBasis(std::size_t w) : width(w) {}

    // Reduces r against the basis; if independent, normalizes, inserts, and
    // returns its pivot column. Returns width when r reduced to zero.
    std::size_t add(std::vector<mpq_class> r) {
        for (std::size_t b = 0; b < rows.size(); ++b) {
            const mpq_class& c = r[pivots[b]];
            if (c == 0) continue;
            mpq_class f = c;
            for (std::size_t j = pivots[b]; j < width; ++j) r[j] -= f * rows[b][j];
        }
        std::size_t pc = width;
        for (std::size_t j = 0; j < width; ++j)
            if (r[j] != 0) {
                pc = j;
                break;
            }
        if (pc == width) return width;
        mpq_class inv = r[pc];
        for (std::size_t j = pc; j < width; ++j) r[j] /= inv;
        for (std::size_t b = 0; b < rows.size(); ++b) {
            const mpq_class& c = rows[b][pc];
            if (c == 0) continue;
            mpq_class f = c;
            for (std::size_t j = pc; j < width; ++j) rows[b][j] -= f * r[j];
        }
        std::size_t at = 0;
        while (at < pivots.size() && pivots[at] < pc) ++at;
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), pc);
        return pc;
    }
};

std::vector<int> base_digits_msd(u64 n, u64 k) {
    std::vector<int> ds;
    while (n > 0) {
        ds.push_back(static_cast<int>(n % k));
        n /= k;
    }
    std::reverse(ds.begin(), ds.end());
    return ds;
}

// Solves t over rows (a_{n+d-1}, ..., a_n | a_{n+d}) for n in [lo, hi).
// Returns false when the window system is inconsistent.
bool solve_window(const std::vector<mpq_class>& vals, u64 lo, u64 hi, int d,
                  std::vector<mpq_class>& t_out) {
    std::size_t w = static_cast<std::size_t>(d) + 1;
    RrefBasis basis(w);
    for (u64 n = lo; n < hi; ++n) {
        std::vector<mpq_class> row(w);
        for (int j = 0; j < d; ++j)
            row[static_cast<std::size_t>(j)] = vals[n + static_cast<u64>(d - 1 - j)];
        row[static_cast<std::size_t>(d)] = vals[n + static_cast<u64>(d)];
        if (basis.add(std::move(row)) == static_cast<std::size_t>(d))
            return false;  // pivot in the augmented column: no solution
    }
    t_out.assign(static_cast<std::size_t>(d), mpq_class(0));
    for (std::size_t b = 0; b < basis.rows.size(); ++b)
        t_out[basis.pivots[b]] = basis.rows[b][static_cast<std::size_t>(d)];
    return true;
}

u64 count_violations(const std::vector<mpq_class>& vals, u64 N, int d,
                     const std::vector<mpq_class>& t) {
    return reduce_chunks<u64>(0, N - static_cast<u64>(d), u64{0}, [&](u64 lo, u64 hi) {
        u64 bad = 0;
        for (u64 n = lo; n < hi; ++n) {
            mpq_class s(0);
            for (int j = 0; j < d; ++j)
                s += t[static_cast<std::size_t>(j)] * vals[n + static_cast<u64>(d - 1 - j)];
            if (s != vals[n + static_cast<u64>(d)]) ++bad;
        }
        return bad;
    });
}

}  // namespace

ValueSequence values_of(const Sequence& a) {
    Sequence base = a;
    return {[base](u64 n) { return mpq_class(base.eval(n)); }, a.tag()};
}

ValueSequence signed_values_of(const Sequence& a) {
    if (a.alphabet().size != 2)
        throw std::invalid_argument("signed reading needs a binary alphabet");
    Sequence base = a;
    return {[base](u64 n) { return mpq_class(base.eval(n) == 0 ? 1 : -1); },
            a.tag() + " signed"};
}

std::vector<mpq_class> eval_values(const ValueSequence& a, u64 N) {
    std::vector<mpq_class> out(N);
    for_chunks(0, N, [&](u64 lo, u64 hi, u64) {
        for (u64 n = lo; n < hi; ++n) out[n] = a.eval(n);
    });
    return out;
}

void LinearRepresentation::validate() const {
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
    if (k < 2 || k > 36) throw std::invalid_argument("base must be between 2 and 36");
    std::size_t D = static_cast<std::size_t>(dimension);
    if (lambda.size() != D || gamma.size() != D)
        throw std::invalid_argument("vector sizes must match the dimension");
    if (mats.size() != k) throw std::invalid_argument("need one matrix per digit");
    for (const auto& m : mats)
        if (m.size() != D * D)
            throw std::invalid_argument("matrix sizes must match the dimension");
    if (field == ScalarField::prime_field) {
        if (!is_prime(modulus)) throw std::invalid_argument("modulus must be prime");
        mpz_class m(static_cast<unsigned long>(modulus));
        auto residue = [&m](const mpq_class& x) {
            return x.get_den() == 1 && x.get_num() >= 0 && x.get_num() < m;
        };
        for (const auto& x : lambda)
            if (!residue(x)) throw std::invalid_argument("entries must be residues mod p");
        for (const auto& x : gamma)
            if (!residue(x)) throw std::invalid_argument("entries must be residues mod p");
        for (const auto& m : mats)
            for (const auto& x : m)
                if (!residue(x))
                    throw std::invalid_argument("entries must be residues mod p");
    } else if (modulus != 0) {
        throw std::invalid_argument("rational representations carry no modulus");
    }
}

mpq_class linrep_eval(const LinearRepresentation& rep, u64 n) {
    rep.validate();
    int D = rep.dimension;
    std::vector<mpq_class> v = rep.lambda;
    for (int d : base_digits_msd(n, rep.k)) {
        v = row_times(v, rep.mats[static_cast<std::size_t>(d)], D);
        if (rep.field == ScalarField::prime_field)
            for (auto& x : v) reduce_mod(x, rep.modulus);
    }
    mpq_class out(0);
    for (int i = 0; i < D; ++i)
        out += v[static_cast<std::size_t>(i)] * rep.gamma[static_cast<std::size_t>(i)];
    if (rep.field == ScalarField::prime_field) reduce_mod(out, rep.modulus);
    return out;
}

ValueSequence linrep_sequence(const LinearRepresentation& rep) {
    rep.validate();
    auto r = std::make_shared<LinearRepresentation>(rep);
    return {[r](u64 n) { return linrep_eval(*r, n); }, "linear-representation"};
}

LinearRepresentation binary_digit_sum_representation() {
    LinearRepresentation rep;
    rep.dimension = 2;
    rep.k = 2;
    rep.lambda = {mpq_class(0), mpq_class(1)};
    rep.mats = {{mpq_class(1), mpq_class(0), mpq_class(0), mpq_class(1)},
                {mpq_class(1), mpq_class(0), mpq_class(1), mpq_class(1)}};
    rep.gamma = {mpq_class(1), mpq_class(0)};
    return rep;
}

LinearRepresentation identity_representation() {
    LinearRepresentation rep;
    rep.dimension = 2;
    rep.k = 2;
    rep.lambda = {mpq_class(0), mpq_class(1)};
    rep.mats = {{mpq_class(2), mpq_class(0), mpq_class(0), mpq_class(1)},
                {mpq_class(2), mpq_class(0), mpq_class(1), mpq_class(1)}};
    rep.gamma = {mpq_class(1), mpq_class(0)};
    return rep;
}

LinearRepresentation constant_representation(const mpq_class& c, u64 k) {
    LinearRepresentation rep;
    rep.dimension = 1;
    rep.k = k;
    rep.lambda = {mpq_class(1)};
    rep.mats.assign(k, {mpq_class(1)});
    rep.gamma = {c};
    return rep;
}

ValueSequence lambda_op(const std::string& u, const ValueSequence& a, u64 k) {
    std::vector<int> ds = parse_digits(u, k);
    u64 stride = checked_pow(k, static_cast<unsigned>(ds.size()));
    u64 r = digits_value(ds, k);
    ValueSequence base = a;
    auto eval = [base, stride, r](u64 n) {
        if (n > (std::numeric_limits<u64>::max() - r) / stride)
            throw std::overflow_error("index past the 64-bit range");
        return base.eval(stride * n + r);
    };
    return {eval, a.name + "@(" + std::to_string(ds.size()) + "," + std::to_string(r) + ")"};
}

LinearRepresentation lambda_op(const std::string& u, const LinearRepresentation& rep) {
    rep.validate();
    std::vector<int> ds = parse_digits(u, rep.k);
    LinearRepresentation out = rep;
    std::vector<mpq_class> col = rep.gamma;
    for (int d : ds) {  // first letter applied first (innermost factor)
        col = mat_times_col(rep.mats[static_cast<std::size_t>(d)], col, rep.dimension);
        if (rep.field == ScalarField::prime_field)
            for (auto& x : col) reduce_mod(x, rep.modulus);
    }
    out.gamma = std::move(col);
    return out;
}

Sequence lambda_op(const std::string& u, const Sequence& a, u64 k) {
    std::vector<int> ds = parse_digits(u, k);
    KernelAddress addr;
    addr.i = static_cast<int>(ds.size());
    addr.r = digits_value(ds, k);
    addr.k = k;
    return kernel_element(a, addr);
}

KernelRankReport kernel_rank(const ValueSequence& a, u64 k, int depth, u64 N) {
    if (k < 2) throw std::invalid_argument("base must be at least 2");
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    if (N < 2) throw std::invalid_argument("horizon must be at least 2");
    u64 top = checked_pow(k, static_cast<unsigned>(depth));
    if (N > (std::numeric_limits<u64>::max() - (top - 1)) / top)
        throw std::overflow_error("kernel truncation exceeds the index range");

    KernelRankReport rep;
    rep.depth = depth;
    rep.horizon = N;
    RrefBasis full(static_cast<std::size_t>(N));
    RrefBasis half(static_cast<std::size_t>(N / 2));
    for (int i = 0; i <= depth; ++i) {
        u64 stride = checked_pow(k, static_cast<unsigned>(i));
        for (u64 r = 0; r < stride; ++r) {
            std::vector<mpq_class> row(static_cast<std::size_t>(N));
            for_chunks(0, N, [&](u64 lo, u64 hi, u64) {
                for (u64 n = lo; n < hi; ++n) row[n] = a.eval(stride * n + r);
            });
            std::vector<mpq_class> head(row.begin(),
                                        row.begin() + static_cast<std::ptrdiff_t>(N / 2));
            full.add(std::move(row));
            half.add(std::move(head));
        }
    }
    rep.rank = static_cast<int>(full.rows.size());
    rep.rank_at_half = static_cast<int>(half.rows.size());
    rep.stable = rep.rank == rep.rank_at_half;
    return rep;
}

std::optional<RecurrenceWitness> detect_linear_recurrence(const ValueSequence& a, u64 N,
                                                          int d_max) {
    if (d_max < 1) throw std::invalid_argument("need a positive order bound");
    if (N < 2) throw std::invalid_argument("horizon must be at least 2");
    std::vector<mpq_class> vals = eval_values(a, N);
    for (int d = 1; d <= d_max && static_cast<u64>(d) < N; ++d) {
        std::vector<mpq_class> t;
        if (!solve_window(vals, 0, N - static_cast<u64>(d), d, t)) continue;
        RecurrenceWitness w;
        w.d = d;
        w.coeffs = std::move(t);
        w.horizon = N;
        w.violations = count_violations(vals, N, d, w.coeffs);
        return w;
    }
    return std::nullopt;
}

std::optional<RecurrenceWitness> detect_linear_recurrence_ae(const ValueSequence& a,
                                                             u64 N, int d_max,
                                                             double max_density) {
    if (d_max < 1) throw std::invalid_argument("need a positive order bound");
    if (N < 2) throw std::invalid_argument("horizon must be at least 2");
    if (max_density < 0.0 || max_density >= 1.0)
        throw std::invalid_argument("density bound must lie in [0, 1)");
    std::vector<mpq_class> vals = eval_values(a, N);
    for (int d = 1; d <= d_max && static_cast<u64>(d) < N; ++d) {
        u64 rows = N - static_cast<u64>(d);
        u64 window = std::min<u64>(rows, 4 * (static_cast<u64>(d) + 1));
        std::vector<mpq_class> t;
        if (!solve_window(vals, rows - window, rows, d, t)) continue;
        u64 bad = count_violations(vals, N, d, t);
        if (static_cast<double>(bad) / static_cast<double>(rows) > max_density) continue;
        RecurrenceWitness w;
        w.d = d;
        w.coeffs = std::move(t);
        w.horizon = N;
        w.violations = bad;
        return w;
    }
    return std::nullopt;
}

InvertibilityReport invertibility_check(const LinearRepresentation& rep) {
    rep.validate();
    if (rep.field != ScalarField::prime_field)
        throw std::invalid_argument("invertibility is decided over a prime field");
    u64 p = rep.modulus;
    auto mulmod = [p](u64 a_, u64 b_) {
        return static_cast<u64>(static_cast<unsigned __int128>(a_) * b_ % p);
    };
    auto powmod = [p, mulmod](u64 b, u64 e) {
        u64 acc = 1 % p;
        b %= p;
        while (e > 0) {
            if (e & 1) acc = mulmod(acc, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return acc;
    };
    InvertibilityReport out;
    int D = rep.dimension;
    for (const auto& mat : rep.mats) {
        std::vector<u64> m(mat.size());
        for (std::size_t j = 0; j < mat.size(); ++j)
            m[j] = static_cast<u64>(mat[j].get_num().get_ui()) % p;
        u64 det = 1 % p;
        for (int c = 0; c < D && det != 0; ++c) {
            int piv = -1;
            for (int r = c; r < D; ++r)
                if (m[static_cast<std::size_t>(r * D + c)] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                det = 0;
                break;
            }
            if (piv != c) {
                for (int j = 0; j < D; ++j)
                    std::swap(m[static_cast<std::size_t>(piv * D + j)],
                              m[static_cast<std::size_t>(c * D + j)]);
                det = (p - det) % p;
            }
            u64 pv = m[static_cast<std::size_t>(c * D + c)];
            det = mulmod(det, pv);
            u64 inv = powmod(pv, p - 2);
            for (int r = c + 1; r < D; ++r) {
                u64 f = mulmod(m[static_cast<std::size_t>(r * D + c)], inv);
                if (f == 0) continue;
                for (int j = c; j < D; ++j) {
                    u64& x = m[static_cast<std::size_t>(r * D + j)];
                    x = (x + mulmod(p - f, m[static_cast<std::size_t>(c * D + j)])) % p;
                }
            }
        }
        out.determinants.push_back(det);
        out.invertible.push_back(det != 0);
    }
    out.all_invertible =
        std::all_of(out.invertible.begin(), out.invertible.end(), [](bool b) { return b; });
    return out;
}

ValueSequence fast_growth_sequence(std::function<mpz_class(u64)> F) {
    if (!F) throw std::invalid_argument("exponent map required");
    mpz_class prev = F(0);
    for (u64 g = 1; g <= 16; ++g) {
        mpz_class cur = F(g);
        if (cur < prev) throw std::invalid_argument("exponent map must be non-decreasing");
        prev = cur;
    }
    smooth_table_u64();  // force the shared table before concurrent use
    auto eval = [F](u64 n) -> mpq_class {
        if (n == 0) return mpq_class(F(0));
        const auto& t = smooth_table_u64();
        return mpq_class(F(static_cast<u64>(t[smooth_interval_index(n)].beta)));
    };
    return {eval, "fast-growth"};
}

ValueSequence max_patch(const ValueSequence& a, std::function<mpz_class(u64)> f) {
    if (!f) throw std::invalid_argument("growth target required");
    ValueSequence base = a;
    auto eval = [base, f](u64 n) {
        mpq_class v = base.eval(n);
        mpq_class fl(f(n));
        return v >= fl ? v : fl;
    };
    return {eval, a.name + "+patch"};
}

}  // namespace seqlab
