#pragma once

#include "ifree/ck_algebra.hpp"
#include "ifree/cumulants.hpp"
#include "ifree/series.hpp"
#include "oracles.hpp"

#include <random>
#include <vector>

namespace fixture {

using namespace ifree;

inline CkScalar random_scalar(std::mt19937& rng, int k, int span = 4) {
    std::vector<Rational> coords;
    for (int i = 0; i <= k; ++i) coords.push_back(oracle::random_rational(rng, span));
    return CkScalar(std::move(coords));
}

/// Random scalar with an invertible order-0 coordinate.
inline CkScalar random_unit(std::mt19937& rng, int k) {
    auto x = random_scalar(rng, k);
    std::vector<Rational> coords(x.coords().begin(), x.coords().end());
    if (coords[0] == 0) coords[0] = 1;
    return CkScalar(std::move(coords));
}

inline CkSeries random_series(std::mt19937& rng, int k, int trunc, bool invertible = false) {
    CkSeries out(k, trunc);
    for (int d = 1; d <= trunc; ++d) out.set_coeff(d, d == 1 && invertible ? random_unit(rng, k) : random_scalar(rng, k));
    return out;
}

inline CumulantTable random_cumulants(std::mt19937& rng, int k, int num_vars, int max_len) {
    CumulantTable out(k, num_vars, max_len);
    for (const auto& w : all_words(num_vars, max_len)) out.set_cumulant(w, random_scalar(rng, k, 3));
    return out;
}

inline InfLaw random_law(std::mt19937& rng, int k, int num_vars, int max_len) {
    return cumulants_to_moments(random_cumulants(rng, k, num_vars, max_len));
}

/// Product in C_k through the power basis: truncated polynomial multiplication in ε.
inline CkScalar power_basis_product(const CkScalar& a, const CkScalar& b) {
    const int k = a.order();
    const auto pa = a.power_basis();
    const auto pb = b.power_basis();
    std::vector<Rational> pc(static_cast<std::size_t>(k) + 1, Rational(0));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) pc[static_cast<std::size_t>(i + j)] += pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)];
    return CkScalar::from_power_basis(pc);
}

}  // namespace fixture
