#include "seqlab/smooth.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>

namespace seqlab {

std::vector<SmoothEntry> smooth_enumeration(u64 limit) {
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    std::vector<SmoothEntry> out;
    u64 p3 = 1;
    int b = 0;
    while (true) {
        u64 v = p3;
        int a = 0;
        while (true) {
            out.push_back({v, a, b});
            if (v > limit / 2) break;
            v *= 2;
            ++a;
        }
        if (p3 > limit / 3) break;
        p3 *= 3;
        ++b;
    }
    std::sort(out.begin(), out.end(),
              [](const SmoothEntry& x, const SmoothEntry& y) { return x.value < y.value; });
    return out;
}

const std::vector<SmoothEntry>& smooth_table_u64() {
    static const std::vector<SmoothEntry> table =
        smooth_enumeration(std::numeric_limits<u64>::max());
    return table;
}

std::size_t smooth_interval_index(u64 n) {
    if (n < 1) throw std::invalid_argument("intervals start at 1");
    const auto& t = smooth_table_u64();
    // last entry with value <= n
    std::size_t lo = 0, hi = t.size();
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (t[mid].value <= n)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

void SmoothSchedule::validate() const {
    if (gamma.empty()) throw std::invalid_argument("schedule is empty");
    if (gamma.front() != 0) throw std::invalid_argument("schedule must start at 0");
    for (std::size_t i = 1; i < gamma.size(); ++i)
        if (gamma[i] <= gamma[i - 1]) throw std::invalid_argument("schedule must increase strictly");
}

int SmoothSchedule::window_index(long beta) const {
    if (beta < 0) throw std::invalid_argument("negative exponent");
    // last j with gamma_j <= beta
    int j = static_cast<int>(gamma.size()) - 1;
    while (j > 0 && gamma[static_cast<std::size_t>(j)] > beta) --j;
    return j;
}

Sequence smooth_parity_sequence(const SmoothSchedule& sched) {
    sched.validate();
    auto s = std::make_shared<SmoothSchedule>(sched);
    smooth_table_u64();  // force the shared table before concurrent use
    return Sequence(Alphabet(2),
                    [s](u64 n) -> Symbol {
                        if (n == 0) return 0;
                        const auto& t = smooth_table_u64();
                        return s->parity(t[smooth_interval_index(n)].beta);
                    },
                    "smooth-parity");
}

}  // namespace seqlab
