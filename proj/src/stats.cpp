#include "seqlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "seqlab/parallel.hpp"

namespace seqlab {

namespace {

char digit_char(int d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

std::vector<Symbol> parse_word(const std::string& w, int alphabet_size) {
    if (w.empty()) throw std::invalid_argument("word must be nonempty");
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (char c : w) {
        int d = c >= '0' && c <= '9'   ? c - '0'
                : c >= 'a' && c <= 'z' ? c - 'a' + 10
                                       : -1;
        if (d < 0 || d >= alphabet_size)
            throw std::invalid_argument("word symbol outside the alphabet");
        out.push_back(d);
    }
    return out;
}

void check_ladder(const std::vector<u64>& cps, u64 N, u64 min_first) {
    if (cps.empty()) throw std::invalid_argument("checkpoint ladder must be nonempty");
    u64 prev = 0;
    for (u64 c : cps) {
        if (c <= prev) throw std::invalid_argument("checkpoints must be positive and increasing");
        prev = c;
    }
    if (cps.back() > N) throw std::invalid_argument("horizon is below the last checkpoint");
    if (cps.front() < min_first)
        throw std::invalid_argument("first checkpoint is too small for the word");
}

bool match_at(const std::vector<std::uint8_t>& vals, u64 n, const std::vector<Symbol>& w) {
    for (std::size_t j = 0; j < w.size(); ++j)
        if (vals[n + j] != static_cast<std::uint8_t>(w[j])) return false;
    return true;
}

}  // namespace

FrequencyEstimate freq(const Sequence& a, const std::string& word, u64 N,
                       std::vector<u64> checkpoints) {
    std::vector<Symbol> w = parse_word(word, a.alphabet().size);
    if (w.size() > N) throw std::invalid_argument("word longer than the horizon");
    if (checkpoints.empty()) checkpoints = default_checkpoints(N);
    check_ladder(checkpoints, N, w.size());

    FrequencyEstimate est;
    est.word = word;
    est.checkpoints = checkpoints;
    std::vector<std::uint8_t> vals = eval_range(a, checkpoints.back());

    u64 L = w.size();
    u64 total = 0;
    u64 prev_end = 0;
    for (u64 C : checkpoints) {
        u64 end = C - L + 1;  // exclusive bound on window starts
        total += reduce_chunks<u64>(prev_end, end, 0, [&](u64 lo, u64 hi) {
            u64 cnt = 0;
            for (u64 n = lo; n < hi; ++n) cnt += match_at(vals, n, w) ? 1 : 0;
            return cnt;
        });
        prev_end = end;
        est.counts.push_back(total);
        est.densities.push_back(static_cast<double>(total) / static_cast<double>(end));
    }
    return est;
}

FrequencyEstimate logfreq(const Sequence& a, const std::string& word, u64 N,
                          std::vector<u64> checkpoints) {
    std::vector<Symbol> w = parse_word(word, a.alphabet().size);
    if (w.size() > N) throw std::invalid_argument("word longer than the horizon");
    if (checkpoints.empty()) checkpoints = default_checkpoints(N);
    check_ladder(checkpoints, N, std::max<u64>(w.size(), 2));

    FrequencyEstimate est;
    est.word = word;
    est.logarithmic = true;
    est.checkpoints = checkpoints;
    std::vector<std::uint8_t> vals = eval_range(a, checkpoints.back());

    u64 L = w.size();
    u64 total = 0;
    double weighted = 0.0;
    u64 prev_end = 0;
    for (u64 C : checkpoints) {
        u64 end = C - L + 1;
        total += reduce_chunks<u64>(prev_end, end, 0, [&](u64 lo, u64 hi) {
            u64 cnt = 0;
            for (u64 n = lo; n < hi; ++n) cnt += match_at(vals, n, w) ? 1 : 0;
            return cnt;
        });
        weighted += reduce_chunks<double>(prev_end, end, 0.0, [&](u64 lo, u64 hi) {
            double s = 0.0;
            for (u64 n = lo; n < hi; ++n)
                if (match_at(vals, n, w)) s += 1.0 / static_cast<double>(n + 1);
            return s;
        });
        prev_end = end;
        est.counts.push_back(total);
        est.densities.push_back(weighted / std::log(static_cast<double>(C)));
    }
    return est;
}

namespace {

// distinct / frequent window counts for one length over starts n < starts_end;
// a window is frequent when its share of the starts is strictly above tau, so
// perturbation sets of density exactly tau at the horizon stay excluded
void window_census(const std::vector<std::uint8_t>& vals, u64 starts_end, int ell, int s,
                   double tau, u64* p_out, u64* p_tilde_out) {
    if (starts_end == 0) throw std::invalid_argument("no windows fit the horizon");
    u64 top = checked_pow(static_cast<u64>(s), static_cast<unsigned>(ell - 1));
    std::vector<u64> codes(starts_end);
    u64 code = 0;
    for (int j = 0; j < ell; ++j) code = code * s + vals[static_cast<u64>(j)];
    codes[0] = code;
    for (u64 n = 1; n < starts_end; ++n) {
        code = (code - vals[n - 1] * top) * s + vals[n + static_cast<u64>(ell) - 1];
        codes[n] = code;
    }
    std::sort(codes.begin(), codes.end());
    u64 distinct = 0;
    u64 frequent = 0;
    for (u64 i = 0; i < codes.size();) {
        u64 j = i;
        while (j < codes.size() && codes[j] == codes[i]) ++j;
        ++distinct;
        if (tau > 0.0 &&
            static_cast<double>(j - i) / static_cast<double>(starts_end) > tau)
            ++frequent;
        i = j;
    }
    *p_out = distinct;
    if (p_tilde_out) *p_tilde_out = frequent;
}

ComplexityProfile complexity_profile(const Sequence& a, int ell_max, u64 N, double tau,
                                     bool with_tilde) {
    if (ell_max < 1) throw std::invalid_argument("need at least one window length");
    u64 tightest = with_tilde ? N / 2 : N;
    if (tightest <= static_cast<u64>(ell_max))
        throw std::invalid_argument("horizon too small for the longest window");
    int s = a.alphabet().size;
    checked_pow(static_cast<u64>(s), static_cast<unsigned>(ell_max));  // codes must fit

    ComplexityProfile prof;
    prof.horizon = N;
    prof.tau = tau;
    std::vector<std::uint8_t> vals = eval_range(a, N);
    for (int ell = 1; ell <= ell_max; ++ell) {
        prof.lengths.push_back(ell);
        u64 p = 0;
        u64 pt = 0;
        window_census(vals, N - static_cast<u64>(ell) + 1, ell, s, with_tilde ? tau : 0.0,
                      &p, with_tilde ? &pt : nullptr);
        prof.p.push_back(p);
        if (with_tilde) {
            prof.p_tilde.push_back(pt);
            u64 half = N / 2;
            u64 ph = 0;
            u64 pth = 0;
            window_census(vals, half - static_cast<u64>(ell) + 1, ell, s, tau, &ph, &pth);
            prof.p_tilde_half.push_back(pth);
        }
    }
    return prof;
}

}  // namespace

ComplexityProfile subword_complexity(const Sequence& a, int ell_max, u64 N) {
    return complexity_profile(a, ell_max, N, 0.0, false);
}

ComplexityProfile asymptotic_subword_complexity(const Sequence& a, int ell_max, u64 N,
                                                double tau) {
    if (tau <= 0.0) throw std::invalid_argument("threshold must be positive");
    return complexity_profile(a, ell_max, N, tau, true);
}

Decomposition greedy_decompose(const Sequence& a, u64 N, double tau, int probe_cap) {
    if (N == 0) throw std::invalid_argument("horizon must be positive");
    if (tau <= 0.0) throw std::invalid_argument("threshold must be positive");
    if (probe_cap < 2) throw std::invalid_argument("probe cap must be at least 2");
    if (a.alphabet().size > 36)
        throw std::invalid_argument("alphabet too large for word rendering");

    std::vector<std::uint8_t> vals = eval_range(a, N);

    // degenerate input: no symbol is frequent enough to anchor a block
    {
        std::vector<u64> sym_counts(static_cast<std::size_t>(a.alphabet().size), 0);
        for (std::uint8_t v : vals) ++sym_counts[v];
        bool any = false;
        for (u64 c : sym_counts)
            if (static_cast<double>(c) / static_cast<double>(N) >= tau) any = true;
        if (!any) throw std::domain_error("every symbol falls below the frequency threshold");
    }

    Decomposition dec;
    dec.analyzed = N;
    dec.tau = tau;

    // The growing prefix of the remainder goes sub-tau exactly when it first
    // absorbs a rare window, and a rare word's extensions are at least as
    // rare, so probing the full-length trailing window detects the earliest
    // trigger position. Census all probe-length windows once, then mark the
    // end position of every rare one.
    u64 P = static_cast<u64>(probe_cap);
    std::vector<std::uint8_t> rare_end(N, 0);
    if (N >= P) {
        u64 starts = N - P + 1;
        std::vector<u64> order(starts);
        for (u64 i = 0; i < starts; ++i) order[i] = i;
        const std::uint8_t* base = vals.data();
        std::size_t plen = static_cast<std::size_t>(P);
        std::sort(order.begin(), order.end(), [base, plen](u64 x, u64 y) {
            return std::memcmp(base + x, base + y, plen) < 0;
        });
        double cut = tau * static_cast<double>(starts);
        for (u64 i = 0; i < starts;) {
            u64 j = i;
            while (j < starts &&
                   std::memcmp(base + order[j], base + order[i], plen) == 0)
                ++j;
            if (static_cast<double>(j - i) < cut)
                for (u64 t = i; t < j; ++t) rare_end[order[t] + P - 1] = 1;
            i = j;
        }
    }

    u64 pos = 0;
    u64 p = P - 1;  // probe windows must lie inside the current remainder
    for (; p < N; ++p) {
        if (!rare_end[p]) continue;
        std::string block;
        for (u64 n = pos; n < p; ++n) block.push_back(digit_char(vals[n]));
        dec.blocks.push_back(std::move(block));
        pos = p;
        dec.boundaries.push_back(pos);
        p = pos + P - 2;  // resume with the first window starting at pos
    }
    for (u64 n = pos; n < N; ++n) dec.tail.push_back(digit_char(vals[n]));
    dec.kind = dec.blocks.empty() ? Decomposition::Kind::dagger
                                  : Decomposition::Kind::double_dagger;
    return dec;
}

DiscrepancyReport shift_invariance(const Sequence& a, u64 m, u64 N,
                                   std::vector<u64> checkpoints, double eps) {
    if (m < 1) throw std::invalid_argument("shift must be at least 1");
    return discrepancy_density(a, shift_by(a, m), N, std::move(checkpoints), eps);
}

}  // namespace seqlab
