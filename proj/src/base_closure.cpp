#include "seqlab/base_closure.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqlab/primes.hpp"

namespace seqlab {

namespace {

// reduce v against the echelon rows; returns the first nonzero column, or
// the vector size if v reduced to zero
std::size_t eliminate(std::vector<mpq_class>& v, const std::vector<std::vector<mpq_class>>& rows,
                      const std::vector<std::size_t>& pivots) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
        std::size_t p = pivots[j];
        if (v[p] != 0) {
            mpq_class f = v[p] / rows[j][p];
            for (std::size_t c = p; c < v.size(); ++c) v[c] -= f * rows[j][c];
        }
    }
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    return lead;
}

}  // namespace

BaseSpace base_closure(const std::vector<u64>& bases) {
    for (u64 b : bases)
        if (b < 2) throw std::invalid_argument("bases must be at least 2");

    BaseSpace out;
    std::vector<std::vector<std::pair<u64, int>>> factored;
    factored.reserve(bases.size());
    for (u64 b : bases) {
        factored.push_back(factorize(b));
        for (const auto& [p, e] : factored.back()) out.prime_support.push_back(p);
    }
    std::sort(out.prime_support.begin(), out.prime_support.end());
    out.prime_support.erase(std::unique(out.prime_support.begin(), out.prime_support.end()),
                            out.prime_support.end());

    std::size_t dim = out.prime_support.size();
    for (const auto& fac : factored) {
        std::vector<mpq_class> v(dim, 0);
        for (const auto& [p, e] : fac) {
            std::size_t c = static_cast<std::size_t>(
                std::lower_bound(out.prime_support.begin(), out.prime_support.end(), p) -
                out.prime_support.begin());
            v[c] = e;
        }
        std::size_t lead = eliminate(v, out.basis, out.pivots);
        if (lead == dim) continue;  // dependent on the rows so far
        // keep the rows ordered by pivot column
        std::size_t at = 0;
        while (at < out.pivots.size() && out.pivots[at] < lead) ++at;
        out.basis.insert(out.basis.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
        out.pivots.insert(out.pivots.begin() + static_cast<std::ptrdiff_t>(at), lead);
    }
    return out;
}

bool BaseSpace::member(u64 k) const {
    if (k == 0) throw std::invalid_argument("membership is defined for positive integers");
    std::vector<mpq_class> v(prime_support.size(), 0);
    for (const auto& [p, e] : factorize(k)) {
        auto it = std::lower_bound(prime_support.begin(), prime_support.end(), p);
        if (it == prime_support.end() || *it != p) return false;  // prime outside the support
        v[static_cast<std::size_t>(it - prime_support.begin())] = e;
    }
    return eliminate(v, basis, pivots) == v.size();
}

}  // namespace seqlab
