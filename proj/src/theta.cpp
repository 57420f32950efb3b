#include "seqlab/theta.hpp"

#include <array>
#include <bit>
#include <memory>
#include <stdexcept>

namespace seqlab {

namespace {

using BinTable = std::array<std::array<u64, 65>, 65>;

const BinTable& binomials() {
    static const BinTable table = [] {
        BinTable b{};
        for (int n = 0; n <= 64; ++n) {
            b[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                b[n][k] = b[n - 1][k - 1] + b[n - 1][k];
        }
        return b;
    }();
    return table;
}

// r with r(r+1)/2 <= s < (r+1)(r+2)/2; the brackets [r(r+1)/2, r(r+1)/2 + r]
// tile the non-negative integers, so this is the unique admissible r.
int weight_class(int s) {
    int r = 0;
    while ((r + 1) * (r + 2) / 2 <= s) ++r;
    return r;
}

void require_unit_interval(const Real& theta) {
    if (theta.compare(mpq_class(0)) < 0 || theta.compare(mpq_class(1)) > 0)
        throw std::invalid_argument("theta must lie in [0, 1]");
}

// slots for the trailing-1 subclass of each shape: the whole shape gets
// floor(theta * C(m, r)) selections and the words ending in 1 get
// min(ceil(theta * C(m-1, r-1)), that total) of them; evaluation then is
// pure table lookups
struct CutoffTable {
    std::array<std::array<u64, 65>, 65> total{};
    std::array<std::array<u64, 65>, 65> tail1{};

    explicit CutoffTable(const Real& theta) {
        const BinTable& b = binomials();
        for (int m = 0; m <= 64; ++m)
            for (int r = 0; r <= m; ++r) {
                total[m][r] = floor_linear(theta, b[m][r], Real()).get_ui();
                if (r >= 1) {
                    u64 t = ceil_linear(theta, b[m - 1][r - 1], Real()).get_ui();
                    tail1[m][r] = std::min(t, total[m][r]);
                }
            }
    }
};

}  // namespace

u64 binomial64(int n, int k) {
    if (n < 0 || n > 64) throw std::out_of_range("binomial64 supports 0 <= n <= 64");
    if (k < 0 || k > n) return 0;
    return binomials()[n][k];
}

BinaryDecomposition decompose_binary(u64 n) {
    BinaryDecomposition out;
    if (n == 0) return out;
    auto bits = digits_msd(n, 2);
    int s = 0;
    for (int x : bits) s += x;
    out.r = weight_class(s);
    std::size_t pos = 0;
    for (int i = 1; i <= out.r; ++i) {
        std::size_t start = pos;
        int ones = 0;
        while (ones < i) ones += bits[pos++];
        std::string u;
        for (std::size_t j = start; j < pos; ++j) u += char('0' + bits[j]);
        out.u_list.push_back(std::move(u));
    }
    std::string v;
    for (std::size_t j = pos; j < bits.size(); ++j) v += char('0' + bits[j]);
    out.v = std::move(v);
    return out;
}

u64 word_rank(const std::string& w) {
    if (w.size() > 64) throw std::invalid_argument("words longer than 64 symbols are not supported");
    int weight = 0;
    for (char c : w) {
        if (c != '0' && c != '1') throw std::invalid_argument("word must be over {0,1}");
        weight += c - '0';
    }
    const BinTable& b = binomials();
    u64 rank = 0;
    int left = weight;
    int m = static_cast<int>(w.size());
    for (int i = 0; i < m && left > 0; ++i) {
        if (w[static_cast<std::size_t>(i)] == '1') {
            // words that agree so far but place a 0 here keep all `left`
            // ones for the m-1-i later positions
            rank += b[m - 1 - i][left];
            --left;
        }
    }
    return rank;
}

int f_canonical(const std::string& w, const Real& theta) {
    require_unit_interval(theta);
    int m = static_cast<int>(w.size());
    int r = 0;
    for (char c : w) {
        if (c != '0' && c != '1') throw std::invalid_argument("word must be over {0,1}");
        r += c - '0';
    }
    u64 total = floor_linear(theta, binomial64(m, r), Real()).get_ui();
    if (w.empty()) return 0 < total ? 1 : 0;
    std::string head = w.substr(0, w.size() - 1);
    if (w.back() == '1') {
        u64 tail1 = std::min(ceil_linear(theta, binomial64(m - 1, r - 1), Real()).get_ui(), total);
        return word_rank(head) < tail1 ? 1 : 0;
    }
    u64 tail1 = r >= 1
                    ? std::min(ceil_linear(theta, binomial64(m - 1, r - 1), Real()).get_ui(), total)
                    : 0;
    return word_rank(head) < total - tail1 ? 1 : 0;
}

Sequence theta_frequency_sequence(const Real& theta) {
    require_unit_interval(theta);
    auto cut = std::make_shared<const CutoffTable>(theta);
    auto eval = [cut](u64 n) -> Symbol {
        if (n == 0) return 0;
        const BinTable& b = binomials();
        int s = popcount64(n);
        int r = weight_class(s);
        // the final u-block spans from just below the (r(r-1)/2)-th one
        // (from the top) through the (r(r+1)/2)-th one, inclusive
        int before = r * (r - 1) / 2;
        int upto = r * (r + 1) / 2;
        int top = 63 - std::countl_zero(n);
        int start = before == 0 ? top : -1;
        int end = -1;
        int seen = 0;
        for (int i = top; i >= 0; --i) {
            if (!((n >> i) & 1)) continue;
            ++seen;
            if (seen == before) start = i - 1;
            if (seen == upto) {
                end = i;
                break;
            }
        }
        int m = start - end + 1;
        u64 chunk = (n >> end) & (m >= 64 ? ~u64{0} : ((u64{1} << m) - 1));
        // the block always ends in 1; rank its head among the shorter shape
        u64 head = chunk >> 1;
        u64 rank = 0;
        int left = r - 1;
        for (int p = m - 2; p >= 0 && left > 0; --p) {
            if ((head >> p) & 1) {
                rank += b[p][left];
                --left;
            }
        }
        return rank < cut->tail1[m][r] ? 1 : 0;
    };
    return Sequence(Alphabet(2), std::move(eval), "theta-frequency(" + theta.describe() + ")");
}

}  // namespace seqlab
