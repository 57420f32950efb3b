#include "seqlab/sturmian.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace seqlab {

namespace {

void require_slope(const Real& theta) {
    if (theta.compare(mpq_class(0)) <= 0 || theta.compare(mpq_class(1)) >= 0)
        throw std::invalid_argument("slope must lie in (0, 1)");
}

void require_intercept(const Real& rho) {
    if (rho.compare(mpq_class(0)) < 0 || rho.compare(mpq_class(1)) >= 0)
        throw std::invalid_argument("intercept must lie in [0, 1)");
}

Symbol bracket_diff(const Real& theta, const Real& rho, u64 n, BracketMode mode) {
    mpz_class hi, lo;
    if (mode == BracketMode::floor_diff) {
        hi = floor_linear(theta, n + 1, rho);
        lo = floor_linear(theta, n, rho);
    } else {
        hi = ceil_linear(theta, n + 1, rho);
        lo = ceil_linear(theta, n, rho);
    }
    return static_cast<Symbol>(mpz_class(hi - lo).get_si());
}

}  // namespace

Sequence sturmian(const Real& theta, const Real& rho, BracketMode mode) {
    require_slope(theta);
    require_intercept(rho);
    std::string tag = std::string(mode == BracketMode::floor_diff ? "sturmian(" : "sturmian-ceil(") +
                      theta.describe() + "," + rho.describe() + ")";
    return Sequence(Alphabet(2), [theta, rho, mode](u64 n) { return bracket_diff(theta, rho, n, mode); },
                    std::move(tag));
}

Sequence patched_sturmian(const Real& theta, const std::vector<Real>& rho_list,
                          const std::vector<u64>& block_lengths) {
    require_slope(theta);
    if (rho_list.empty() || block_lengths.empty())
        throw std::invalid_argument("patched sequence needs at least one block");
    if (rho_list.size() != block_lengths.size())
        throw std::invalid_argument("one intercept per block is required");
    for (const Real& rho : rho_list) require_intercept(rho);
    for (std::size_t j = 1; j < block_lengths.size(); ++j)
        if (block_lengths[j] <= block_lengths[j - 1])
            throw std::invalid_argument("block lengths must be strictly increasing");

    // ends[j] = first index after block j; the last block has no end
    auto ends = std::make_shared<std::vector<u64>>();
    u64 total = 0;
    for (std::size_t j = 0; j + 1 < block_lengths.size(); ++j) {
        total += block_lengths[j];
        ends->push_back(total);
    }
    auto rhos = std::make_shared<std::vector<Real>>(rho_list);
    auto eval = [theta, ends, rhos](u64 n) {
        std::size_t j = static_cast<std::size_t>(
            std::upper_bound(ends->begin(), ends->end(), n) - ends->begin());
        return bracket_diff(theta, (*rhos)[j], n, BracketMode::floor_diff);
    };
    return Sequence(Alphabet(2), std::move(eval),
                    "patched-sturmian(" + theta.describe() + "," +
                        std::to_string(rho_list.size()) + " blocks)");
}

Sequence bracket_floor_mod(const Real& alpha, const Real& beta, int m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    auto eval = [alpha, beta, m](u64 n) {
        mpz_class v = floor_linear(alpha, n, beta);
        return static_cast<Symbol>(
            mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m)));
    };
    return Sequence(Alphabet(m), std::move(eval),
                    "bracket-mod(" + alpha.describe() + "," + beta.describe() + "," +
                        std::to_string(m) + ")");
}

}  // namespace seqlab
