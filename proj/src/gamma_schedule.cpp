#include "seqlab/gamma_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace seqlab {

namespace {

// 3^13 = 1594323 is the largest power of 3 we evaluate by exact summation
constexpr long kExactPow3 = 13;

mpz_class pow3_mpz(long g) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(g));
    return r;
}

u64 pow3_u64(long g) {
    u64 r = 1;
    for (long i = 0; i < g; ++i) r *= 3;
    return r;
}

enum class Verdict { pass, fail, unknown };

// window test at level j: odd j needs L < 2^-j, even j needs L > 1 - 2^-j
Verdict window_test(int j, const mpq_class& lo, const mpq_class& hi) {
    mpq_class b(mpz_class(1), mpz_class(mpz_class(1) << static_cast<unsigned long>(j)));
    if (j % 2 == 1) {
        if (hi < b) return Verdict::pass;
        if (lo >= b) return Verdict::fail;
    } else {
        mpq_class c = 1 - b;
        if (lo > c) return Verdict::pass;
        if (hi <= c) return Verdict::fail;
    }
    return Verdict::unknown;
}

// prefix sums H(3^g) recur across level searches and re-checks; memoize and
// extend incrementally from the largest cached prefix below g
const mpq_class& harmonic_prefix_pow3(long g) {
    static std::map<long, mpq_class> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    u64 from = 0;
    mpq_class sum = 0;
    auto lo = cache.lower_bound(g);
    if (lo != cache.begin()) {
        --lo;
        from = pow3_u64(lo->first);
        sum = lo->second;
    }
    sum += harmonic_range_exact(from, pow3_u64(g));
    return cache.emplace(g, std::move(sum)).first->second;
}

LogAverage log_average_exact_impl(const SmoothSchedule& sched, long g) {
    u64 N = pow3_u64(g);
    const auto& t = smooth_table_u64();
    std::vector<std::pair<u64, u64>> runs;
    u64 run_start = 0;
    bool open = false;
    for (std::size_t i = 0; i < t.size() && t[i].value < N; ++i) {
        // interval [t[i].value, t[i+1].value); N is itself smooth, so the
        // loop ends exactly at an interval boundary
        if (sched.parity(t[i].beta) == 1) {
            if (!open) {
                run_start = t[i].value;
                open = true;
            }
        } else if (open) {
            runs.push_back({run_start, t[i].value});
            open = false;
        }
    }
    if (open) runs.push_back({run_start, N});
    LogAverage r;
    r.exact = true;
    r.lo = harmonic_ranges_exact(runs) / harmonic_prefix_pow3(g);
    r.hi = r.lo;
    return r;
}

// increasing walk over 2^a 3^b with one heap candidate per row of fixed b
class SmoothWalker {
    struct Item {
        mpz_class v;
        int a, b;
    };
    struct Cmp {
        bool operator()(const Item& x, const Item& y) const { return x.v > y.v; }
    };
    std::priority_queue<Item, std::vector<Item>, Cmp> heap_;

  public:
    SmoothWalker() { heap_.push({mpz_class(1), 0, 0}); }
    Item next() {
        Item it = heap_.top();
        heap_.pop();
        heap_.push({it.v * 2, it.a + 1, it.b});
        if (it.a == 0) heap_.push({it.v * 3, 0, it.b + 1});
        return it;
    }
};

// Accumulates the parity-1 interval mass as a rational enclosure while
// walking the smooth intervals once, so a scan over many cutoffs stays linear.
class EnclosureScan {
    const SmoothSchedule& sched_;
    int prec_;
    SmoothWalker walker_;
    mpz_class prev_;
    int prev_beta_ = 0;
    bool open_ = false;
    mpq_class num_lo_ = 0, num_hi_ = 0;

  public:
    EnclosureScan(const SmoothSchedule& sched, int prec) : sched_(sched), prec_(prec) {
        auto first = walker_.next();
        prev_ = first.v;
        prev_beta_ = first.b;
    }

    // consume whole intervals until the frontier sits exactly on target
    // (target must be smooth, e.g. a power of 3)
    void advance_to(const mpz_class& target) {
        while (prev_ < target) {
            if (sched_.parity(prev_beta_) == 1) {
                if (!open_) {
                    auto h = harmonic_enclosure(prev_, prec_);
                    num_lo_ -= h.second;
                    num_hi_ -= h.first;
                    open_ = true;
                }
            } else if (open_) {
                auto h = harmonic_enclosure(prev_, prec_);
                num_lo_ += h.first;
                num_hi_ += h.second;
                open_ = false;
            }
            auto nx = walker_.next();
            prev_ = nx.v;
            prev_beta_ = nx.b;
        }
        if (prev_ != target) throw std::logic_error("scan target is not a smooth number");
    }

    LogAverage eval_here() {
        auto hN = harmonic_enclosure(prev_, prec_);
        mpq_class nlo = num_lo_, nhi = num_hi_;
        if (open_) {
            nlo += hN.first;
            nhi += hN.second;
        }
        LogAverage r;
        r.exact = false;
        if (nlo < 0) nlo = 0;
        r.lo = nlo / hN.second;
        r.hi = nhi / hN.first;
        if (r.hi > 1) r.hi = 1;
        if (r.lo < 0) r.lo = 0;
        return r;
    }
};

long level_search(const SmoothSchedule& prefix, int j, long cap) {
    long start = prefix.gamma.back() + 1;
    long last = prefix.gamma.back() + cap;
    double closest = 0.0;
    for (long g = start; g <= std::min(last, kExactPow3); ++g) {
        LogAverage L = log_average_exact_impl(prefix, g);
        if (window_test(j, L.lo, L.hi) == Verdict::pass) return g;
        closest = L.value();
    }
    long g_enc = std::max(start, kExactPow3 + 1);
    if (g_enc <= last) {
        EnclosureScan scan(prefix, 256);
        mpz_class N = pow3_mpz(g_enc);
        for (long g = g_enc; g <= last; ++g) {
            scan.advance_to(N);
            LogAverage L = scan.eval_here();
            Verdict v = window_test(j, L.lo, L.hi);
            if (v == Verdict::unknown) {
                L = log_average_enclosure(prefix, g, 1024);
                v = window_test(j, L.lo, L.hi);
                if (v == Verdict::unknown)
                    throw std::runtime_error("window test unresolved at escalated precision");
            }
            if (v == Verdict::pass) return g;
            closest = L.value();
            N *= 3;
        }
    }
    throw ScheduleSearchError(cap, last, closest,
                              "level " + std::to_string(j) + " search cap of " +
                                  std::to_string(cap) + " exceeded; last average " +
                                  std::to_string(closest));
}

}  // namespace

double LogAverage::value() const { return mpq_class((lo + hi) / 2).get_d(); }

LogAverage log_average_enclosure(const SmoothSchedule& sched, long g, int prec_bits) {
    sched.validate();
    if (g < 0) throw std::invalid_argument("negative exponent");
    EnclosureScan scan(sched, prec_bits);
    mpz_class N = pow3_mpz(g);
    scan.advance_to(N);
    return scan.eval_here();
}

LogAverage log_average_at(const SmoothSchedule& sched, long g, int prec_bits) {
    sched.validate();
    if (g < 0) throw std::invalid_argument("negative exponent");
    if (g <= kExactPow3) return log_average_exact_impl(sched, g);
    return log_average_enclosure(sched, g, prec_bits);
}

LogOscResult log_osc_check(const Sequence& a, const SmoothSchedule& sched, int j) {
    sched.validate();
    if (j < 0 || j >= static_cast<int>(sched.gamma.size()))
        throw std::invalid_argument("level outside the schedule");
    if (a.eval(0) != 0) throw std::invalid_argument("sequence does not match the schedule");
    const auto& t = smooth_table_u64();
    u64 lim = u64(1) << 20;
    if (sched.gamma[static_cast<std::size_t>(j)] <= kExactPow3)
        lim = std::min(lim, pow3_u64(sched.gamma[static_cast<std::size_t>(j)]));
    for (u64 n = 1; n < lim; ++n)
        if (a.eval(n) != sched.parity(t[smooth_interval_index(n)].beta))
            throw std::invalid_argument("sequence does not match the schedule");
    long gj = sched.gamma[static_cast<std::size_t>(j)];
    if (j == 0) return {0, gj, true, 0.0};

    LogAverage L = log_average_at(sched, gj);
    Verdict v = window_test(j, L.lo, L.hi);
    if (v == Verdict::unknown) {
        L = log_average_enclosure(sched, gj, 1024);
        v = window_test(j, L.lo, L.hi);
        if (v == Verdict::unknown)
            throw std::runtime_error("window test unresolved at escalated precision");
    }
    return {j, gj, v == Verdict::pass, L.value()};
}

SmoothSchedule gamma_schedule(int j_max, int k_base) {
    if (k_base != 3) throw std::invalid_argument("only base 3 is supported");
    if (j_max < 1) throw std::invalid_argument("j_max must be >= 1");
    SmoothSchedule s;
    s.gamma = {0};
    for (int j = 1; j <= j_max; ++j) s.gamma.push_back(level_search(s, j, 10000));
    return s;
}

SmoothLogMass smooth_log_mass(int beta, std::size_t K) {
    if (beta < 0) throw std::invalid_argument("negative exponent");
    const auto& t = smooth_table_u64();
    if (K + 1 >= t.size()) throw std::invalid_argument("cutoff beyond the table");
    std::vector<std::pair<u64, u64>> ranges;
    for (std::size_t i = 0; i < K; ++i)
        if (t[i].beta == beta) ranges.push_back({t[i].value, t[i + 1].value});
    SmoothLogMass r;
    r.mass = harmonic_ranges_exact(ranges);
    double log_hk = t[K].alpha * std::log(2.0) + t[K].beta * std::log(3.0);
    r.ratio = (log_hk == 0.0) ? 0.0 : r.mass.get_d() / log_hk;
    return r;
}

}  // namespace seqlab
