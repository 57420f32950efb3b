#include "seqlab/kernel.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "seqlab/parallel.hpp"

namespace seqlab {

namespace {

char digit_char(u64 d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

Verdict verdict_from(const std::vector<double>& densities, double eps) {
    double final_density = densities.back();
    bool non_increasing = true;
    std::size_t from = densities.size() >= 3 ? densities.size() - 3 : 0;
    for (std::size_t j = from; j + 1 < densities.size(); ++j)
        if (densities[j] < densities[j + 1]) non_increasing = false;
    if (final_density <= eps && non_increasing) return Verdict::equal;
    if (final_density >= std::max(10.0 * eps, 0.1)) return Verdict::distinct;
    return Verdict::inconclusive;
}

void check_checkpoints(const std::vector<u64>& cps, u64 N) {
    if (cps.empty()) throw std::invalid_argument("checkpoint ladder must be nonempty");
    u64 prev = 0;
    for (u64 c : cps) {
        if (c <= prev) throw std::invalid_argument("checkpoints must be positive and increasing");
        prev = c;
    }
    if (cps.back() > N) throw std::invalid_argument("horizon is below the last checkpoint");
}

// Mismatch counting between two index-to-symbol getters, chunk-parallel with
// a deterministic merge, reported as densities at each checkpoint.
template <class GetA, class GetB>
DiscrepancyReport discrepancy_getters(GetA ga, GetB gb, const std::vector<u64>& cps, double eps) {
    DiscrepancyReport rep;
    rep.checkpoints = cps;
    rep.eps = eps;
    u64 total = 0;
    u64 prev = 0;
    for (u64 c : cps) {
        total += reduce_chunks<u64>(prev, c, 0, [&](u64 lo, u64 hi) {
            u64 cnt = 0;
            for (u64 n = lo; n < hi; ++n) cnt += ga(n) != gb(n) ? 1 : 0;
            return cnt;
        });
        prev = c;
        rep.densities.push_back(static_cast<double>(total) / static_cast<double>(c));
    }
    rep.verdict = verdict_from(rep.densities, eps);
    return rep;
}

}  // namespace

void KernelAddress::validate() const {
    if (k < 2) throw std::invalid_argument("kernel base must be at least 2");
    if (i < 0) throw std::invalid_argument("kernel depth must be non-negative");
    if (r >= stride()) throw std::invalid_argument("kernel residue must be below k^i");
}

u64 KernelAddress::stride() const {
    return checked_pow(k, static_cast<unsigned>(i));
}

std::string KernelAddress::word() const {
    std::string out(static_cast<std::size_t>(i), '0');
    u64 v = r;
    for (int pos = i - 1; pos >= 0 && v > 0; --pos) {
        out[static_cast<std::size_t>(pos)] = digit_char(v % k);
        v /= k;
    }
    return out;
}

Sequence kernel_element(const Sequence& a, const KernelAddress& addr) {
    addr.validate();
    u64 stride = addr.stride();
    u64 r = addr.r;
    Sequence base = a;
    auto eval = [base, stride, r](u64 n) -> Symbol {
        if (n > (std::numeric_limits<u64>::max() - r) / stride)
            throw std::overflow_error("kernel index exceeds the 64-bit range");
        return base.eval(stride * n + r);
    };
    return Sequence(a.alphabet(), std::move(eval),
                    a.tag() + "@(" + std::to_string(addr.i) + "," + std::to_string(addr.r) + ")");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::equal: return "equal";
        case Verdict::distinct: return "distinct";
        default: return "inconclusive";
    }
}

std::vector<u64> default_checkpoints(u64 N) {
    if (N == 0) throw std::invalid_argument("horizon must be positive");
    std::vector<u64> out;
    for (u64 div : {u64{16}, u64{8}, u64{4}, u64{2}, u64{1}}) {
        u64 c = N / div;
        if (c == 0) continue;
        if (out.empty() || c > out.back()) out.push_back(c);
    }
    return out;
}

DiscrepancyReport discrepancy_density(const Sequence& a, const Sequence& b, u64 N,
                                      std::vector<u64> checkpoints, double eps) {
    if (a.alphabet().size != b.alphabet().size)
        throw std::invalid_argument("discrepancy requires a shared alphabet");
    if (checkpoints.empty()) checkpoints = default_checkpoints(N);
    check_checkpoints(checkpoints, N);
    u64 top = checkpoints.back();
    std::vector<std::uint8_t> va = eval_range(a, top);
    std::vector<std::uint8_t> vb = eval_range(b, top);
    return discrepancy_getters([&](u64 n) { return va[n]; }, [&](u64 n) { return vb[n]; },
                               checkpoints, eps);
}

KernelClustering cluster_kernel(const Sequence& a, u64 k, int depth, u64 N, double eps) {
    if (k < 2) throw std::invalid_argument("base must be at least 2");
    if (N == 0) throw std::invalid_argument("horizon must be positive");
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");

    KernelClustering out;
    out.base = k;
    out.requested_depth = depth;
    out.horizon = N;
    out.eps = eps;

    // the flat prefix a_0 .. a_{k^d * N - 1} must stay in budget
    constexpr u64 kMaxPrefix = u64{1} << 28;
    if (N > kMaxPrefix) throw std::invalid_argument("horizon exceeds the in-memory clustering budget");
    int d = 0;
    u64 prefix_len = N;
    while (d < depth && prefix_len <= kMaxPrefix / k) {
        prefix_len *= k;
        ++d;
    }
    out.depth = d;
    if (d < depth) {
        out.truncated = true;
        out.warning = "depth truncated from " + std::to_string(depth) + " to " + std::to_string(d) +
                      ": the evaluated prefix is capped at 2^28 entries";
    }

    std::vector<std::uint8_t> vals = eval_range(a, prefix_len);
    std::vector<u64> cps = default_checkpoints(N);

    std::vector<u64> strides(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) strides[static_cast<std::size_t>(i)] = checked_pow(k, static_cast<unsigned>(i));

    for (int i = 0; i <= d; ++i) {
        u64 si = strides[static_cast<std::size_t>(i)];
        for (u64 r = 0; r < si; ++r) {
            KernelAddress addr{i, r, k};
            std::size_t ai = out.addresses.size();
            out.addresses.push_back(addr);

            std::size_t merged_into = std::numeric_limits<std::size_t>::max();
            std::size_t first_inconclusive = std::numeric_limits<std::size_t>::max();
            DiscrepancyReport inconclusive_report;
            DiscrepancyReport merge_report;
            for (std::size_t rep_idx : out.representatives) {
                const KernelAddress& rep = out.addresses[rep_idx];
                u64 sr = strides[static_cast<std::size_t>(rep.i)];
                u64 rr = rep.r;
                DiscrepancyReport cmp = discrepancy_getters(
                    [&, si, r](u64 n) { return vals[si * n + r]; },
                    [&, sr, rr](u64 n) { return vals[sr * n + rr]; }, cps, eps);
                if (cmp.verdict == Verdict::equal) {
                    merged_into = rep_idx;
                    merge_report = std::move(cmp);
                    break;
                }
                if (cmp.verdict == Verdict::inconclusive) {
                    ++out.inconclusive_comparisons;
                    if (first_inconclusive == std::numeric_limits<std::size_t>::max()) {
                        first_inconclusive = rep_idx;
                        inconclusive_report = std::move(cmp);
                    }
                }
            }
            if (merged_into == std::numeric_limits<std::size_t>::max() &&
                first_inconclusive != std::numeric_limits<std::size_t>::max()) {
                merged_into = first_inconclusive;
                merge_report = std::move(inconclusive_report);
                ++out.inconclusive_merges;
            }

            if (merged_into == std::numeric_limits<std::size_t>::max()) {
                out.parent.push_back(ai);
                out.class_id.push_back(static_cast<int>(out.representatives.size()));
                out.representatives.push_back(ai);
            } else {
                out.parent.push_back(merged_into);
                auto pos = std::find(out.representatives.begin(), out.representatives.end(),
                                     merged_into);
                out.class_id.push_back(static_cast<int>(pos - out.representatives.begin()));
                out.merges.push_back({ai, merged_into, std::move(merge_report)});
            }
        }
        out.classes_per_depth.push_back(out.class_count());
    }
    return out;
}

ExactKernel exact_kernel_dfao(const DFAO& m, int k) {
    m.validate();
    if (k != m.k) throw std::invalid_argument("kernel base must match the automaton base");

    // add a start state absorbing leading zeros
    int states = m.states + 1;
    int s = m.states;
    std::vector<int> delta(static_cast<std::size_t>(states) * k);
    std::vector<Symbol> tau(static_cast<std::size_t>(states));
    for (int q = 0; q < m.states; ++q) {
        tau[static_cast<std::size_t>(q)] = m.tau[static_cast<std::size_t>(q)];
        for (int d = 0; d < k; ++d)
            delta[static_cast<std::size_t>(q) * k + d] = m.step(q, d);
    }
    tau[static_cast<std::size_t>(s)] = m.tau[static_cast<std::size_t>(m.q0)];
    delta[static_cast<std::size_t>(s) * k + 0] = s;
    for (int d = 1; d < k; ++d)
        delta[static_cast<std::size_t>(s) * k + d] = m.step(m.q0, d);

    // states reachable from the normalized start
    std::vector<int> reachable;
    {
        std::vector<bool> seen(static_cast<std::size_t>(states));
        std::vector<int> queue = {s};
        seen[static_cast<std::size_t>(s)] = true;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int d = 0; d < k; ++d) {
                int nxt = delta[static_cast<std::size_t>(queue[h]) * k + d];
                if (!seen[static_cast<std::size_t>(nxt)]) {
                    seen[static_cast<std::size_t>(nxt)] = true;
                    queue.push_back(nxt);
                }
            }
        for (int q = 0; q < states; ++q)
            if (seen[static_cast<std::size_t>(q)]) reachable.push_back(q);
    }

    // close the set of digit-word maps g_w(q) = delta*(q, w) under appending
    // digits; each map's kernel sequence is the output vector tau(g(.)) on
    // the reachable states
    ExactKernel out;
    std::map<std::vector<int>, int> seen_maps;
    std::map<std::vector<Symbol>, int> class_of_vector;
    std::vector<std::pair<std::vector<int>, std::string>> queue;

    std::vector<int> identity(static_cast<std::size_t>(states));
    for (int q = 0; q < states; ++q) identity[static_cast<std::size_t>(q)] = q;
    seen_maps.emplace(identity, 0);
    queue.emplace_back(identity, "");

    auto classify = [&](const std::vector<int>& g, const std::string& w) {
        std::vector<Symbol> vec;
        vec.reserve(reachable.size());
        for (int q : reachable) vec.push_back(tau[static_cast<std::size_t>(g[static_cast<std::size_t>(q)])]);
        auto it = class_of_vector.find(vec);
        if (it == class_of_vector.end()) {
            int id = static_cast<int>(out.representatives.size());
            class_of_vector.emplace(std::move(vec), id);
            out.representatives.push_back(w);
            out.class_of_word[w] = id;
            return;
        }
        out.class_of_word[w] = it->second;
    };
    classify(identity, "");

    for (std::size_t h = 0; h < queue.size(); ++h) {
        std::vector<int> g = queue[h].first;
        std::string w = queue[h].second;
        for (int d = 0; d < k; ++d) {
            std::vector<int> child(static_cast<std::size_t>(states));
            for (int q = 0; q < states; ++q)
                child[static_cast<std::size_t>(q)] =
                    delta[static_cast<std::size_t>(g[static_cast<std::size_t>(q)]) * k + d];
            std::string cw = w + digit_char(static_cast<u64>(d));
            classify(child, cw);
            if (seen_maps.emplace(child, 0).second) queue.emplace_back(std::move(child), cw);
        }
    }
    out.size = static_cast<int>(out.representatives.size());
    return out;
}

Sequence product(const Sequence& a, const Sequence& b) {
    int sa = a.alphabet().size;
    int sb = b.alphabet().size;
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(sa) * sb);
    for (int x = 0; x < sa; ++x)
        for (int y = 0; y < sb; ++y)
            labels.push_back("(" + a.alphabet().label(x) + "," + b.alphabet().label(y) + ")");
    Sequence ca = a;
    Sequence cb = b;
    auto eval = [ca, cb, sb](u64 n) -> Symbol { return ca.eval(n) * sb + cb.eval(n); };
    return Sequence(Alphabet(sa * sb, std::move(labels)), std::move(eval),
                    "product(" + a.tag() + "," + b.tag() + ")");
}

Sequence coding(const Sequence& a, const std::vector<Symbol>& rho) {
    if (static_cast<int>(rho.size()) != a.alphabet().size)
        throw std::invalid_argument("coding map must be total on the alphabet");
    int out_size = 1;
    for (Symbol s : rho) {
        if (s < 0) throw std::invalid_argument("coding targets must be non-negative");
        out_size = std::max(out_size, s + 1);
    }
    Sequence base = a;
    std::vector<Symbol> map = rho;
    auto eval = [base, map](u64 n) -> Symbol { return map[static_cast<std::size_t>(base.eval(n))]; };
    return Sequence(Alphabet(out_size), std::move(eval), "coding(" + a.tag() + ")");
}

Sequence ap_restrict(const Sequence& a, u64 q, i64 r) {
    if (q < 1) throw std::invalid_argument("step must be at least 1");
    Sequence base = a;
    auto eval = [base, q, r](u64 n) -> Symbol {
        u128 idx = static_cast<u128>(q) * n;
        if (r >= 0) {
            idx += static_cast<u64>(r);
        } else {
            u128 mag = static_cast<u128>(~static_cast<u64>(r)) + 1;  // |r| without overflow
            if (idx < mag) return base.eval(0);
            idx -= mag;
        }
        if (idx > std::numeric_limits<u64>::max())
            throw std::overflow_error("progression index exceeds the 64-bit range");
        return base.eval(static_cast<u64>(idx));
    };
    return Sequence(a.alphabet(), std::move(eval),
                    a.tag() + "|ap(" + std::to_string(q) + "," + std::to_string(r) + ")");
}

void MonoidTable::validate() const {
    if (size < 1) throw std::invalid_argument("monoid must be nonempty");
    if (op.size() != static_cast<std::size_t>(size) * size)
        throw std::invalid_argument("operation table has the wrong shape");
    for (int v : op)
        if (v < 0 || v >= size) throw std::invalid_argument("operation table value out of range");
    if (identity < 0 || identity >= size)
        throw std::invalid_argument("monoid identity out of range");
    for (int x = 0; x < size; ++x)
        if (apply(identity, x) != x || apply(x, identity) != x)
            throw std::invalid_argument("monoid identity law fails");
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < x; ++y)
            if (apply(x, y) != apply(y, x))
                throw std::invalid_argument("operation table is not commutative");
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
            for (int z = 0; z < size; ++z)
                if (apply(apply(x, y), z) != apply(x, apply(y, z)))
                    throw std::invalid_argument("operation table is not associative");
}

MonoidTable cyclic_monoid(int m) {
    if (m < 1) throw std::invalid_argument("cyclic monoid needs m >= 1");
    MonoidTable t;
    t.size = m;
    t.identity = 0;
    t.name = "Z/" + std::to_string(m);
    t.op.resize(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) t.op[static_cast<std::size_t>(x) * m + y] = (x + y) % m;
    return t;
}

Sequence partial_sums(const Sequence& a, const MonoidTable& monoid) {
    monoid.validate();
    if (monoid.size > 256) throw std::invalid_argument("monoid too large for byte storage");
    if (a.alphabet().size > monoid.size)
        throw std::invalid_argument("alphabet does not embed in the monoid");

    struct PrefixCache {
        std::mutex mtx;
        std::vector<std::uint8_t> prefix;  // prefix[n] = (sum a)_n
    };
    auto cache = std::make_shared<PrefixCache>();
    cache->prefix.push_back(static_cast<std::uint8_t>(monoid.identity));
    Sequence base = a;
    MonoidTable table = monoid;
    auto eval = [cache, base, table](u64 n) -> Symbol {
        std::lock_guard<std::mutex> lock(cache->mtx);
        while (cache->prefix.size() <= n) {
            u64 m = cache->prefix.size() - 1;
            int nxt = table.apply(cache->prefix.back(), base.eval(m));
            cache->prefix.push_back(static_cast<std::uint8_t>(nxt));
        }
        return cache->prefix[static_cast<std::size_t>(n)];
    };
    return Sequence(Alphabet(monoid.size), std::move(eval),
                    "partial-sums(" + a.tag() + ";" + monoid.name + ")");
}

namespace {

KernelAddress address_of_word(const std::string& w, u64 k) {
    u64 r = 0;
    for (char c : w) {
        u64 d = c >= '0' && c <= '9' ? static_cast<u64>(c - '0')
                : c >= 'a' && c <= 'z' ? static_cast<u64>(c - 'a' + 10)
                                       : k;
        if (d >= k) throw std::invalid_argument("word contains a digit outside the base");
        if (r > (std::numeric_limits<u64>::max() - d) / k)
            throw std::overflow_error("word value exceeds the 64-bit range");
        r = r * k + d;
    }
    KernelAddress addr{static_cast<int>(w.size()), r, k};
    addr.validate();
    return addr;
}

}  // namespace

PumpReport pump_test(const Sequence& a, u64 k, const std::string& w, const std::string& v,
                     const std::string& u, const std::string& v2, int t_min, int t_max, u64 N,
                     double eps) {
    if (k < 2) throw std::invalid_argument("base must be at least 2");
    if (u.empty()) throw std::invalid_argument("pumped block must be nonempty");
    if (w != v + u + v2) throw std::invalid_argument("split does not reproduce the word");
    if (t_min < 0 || t_min > t_max) throw std::invalid_argument("bad pump range");
    if (N == 0) throw std::invalid_argument("horizon must be positive");

    PumpReport out;
    out.word = w;
    Sequence base_elem = kernel_element(a, address_of_word(w, k));

    for (int t = t_min; t <= t_max; ++t) {
        std::string wt = v;
        for (int j = 0; j < t; ++j) wt += u;
        wt += v2;
        // the pumped address must stay evaluable at every n < N
        bool fits = true;
        u128 top = 1;
        for (std::size_t j = 0; j < wt.size() && fits; ++j) {
            top *= k;
            if (top > std::numeric_limits<u64>::max()) fits = false;
        }
        if (fits && top * N > std::numeric_limits<u64>::max()) fits = false;
        if (!fits) {
            out.truncated = true;
            break;
        }
        Sequence pumped = kernel_element(a, address_of_word(wt, k));
        out.ts.push_back(t);
        out.pumped_words.push_back(wt);
        out.reports.push_back(discrepancy_density(base_elem, pumped, N, {}, eps));
    }
    return out;
}

StructureTable structure_extract(const Sequence& a, u64 k, int depth, u64 N, double eps) {
    StructureTable st;
    st.clustering = cluster_kernel(a, k, depth, N, eps);
    st.d = st.clustering.class_count();
    st.inconclusive_comparisons = st.clustering.inconclusive_comparisons;
    for (std::size_t rep : st.clustering.representatives)
        st.representatives.push_back(st.clustering.addresses[rep]);
    for (std::size_t ai = 0; ai < st.clustering.addresses.size(); ++ai)
        st.phi[st.clustering.addresses[ai].word()] = st.clustering.class_id[ai];
    return st;
}

}  // namespace seqlab
