#include "ifree/series.hpp"

#include "ifree/errors.hpp"

#include <algorithm>
#include <string>

namespace ifree {

namespace {

void check_orders(const CkSeries& f, const CkSeries& g) {
    if (f.order() != g.order()) {
        fail(ErrorKind::OrderMismatch, "series order mismatch: " + std::to_string(f.order()) + " vs " +
                                           std::to_string(g.order()));
    }
}

}  // namespace

CkSeries::CkSeries(int k, int trunc) : k_(k), constant_(k) {
    require(trunc >= 0, ErrorKind::InvalidArgument, "series truncation must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(trunc), CkScalar(k));
}

CkSeries::CkSeries(int k, std::vector<CkScalar> coeffs) : CkSeries(k, CkScalar(k), std::move(coeffs)) {}

CkSeries::CkSeries(int k, CkScalar constant, std::vector<CkScalar> coeffs)
    : k_(k), constant_(std::move(constant)), coeffs_(std::move(coeffs)) {
    require(constant_.order() == k, ErrorKind::OrderMismatch, "constant term has the wrong C_k order");
    for (const auto& c : coeffs_) {
        require(c.order() == k, ErrorKind::OrderMismatch, "series coefficient has the wrong C_k order");
    }
}

const CkScalar& CkSeries::coeff(int degree) const {
    require(degree >= 0 && degree <= trunc(), ErrorKind::InvalidArgument,
            "degree " + std::to_string(degree) + " outside 0.." + std::to_string(trunc()));
    return degree == 0 ? constant_ : coeffs_[static_cast<std::size_t>(degree - 1)];
}

void CkSeries::set_coeff(int degree, CkScalar value) {
    require(degree >= 0 && degree <= trunc(), ErrorKind::InvalidArgument,
            "degree " + std::to_string(degree) + " outside 0.." + std::to_string(trunc()));
    require(value.order() == k_, ErrorKind::OrderMismatch, "coefficient has the wrong C_k order");
    if (degree == 0) {
        constant_ = std::move(value);
    } else {
        coeffs_[static_cast<std::size_t>(degree - 1)] = std::move(value);
    }
}

CkSeries CkSeries::truncated(int trunc) const {
    require(trunc >= 0 && trunc <= this->trunc(), ErrorKind::InvalidArgument, "cannot extend a truncated series");
    return CkSeries(k_, constant_, std::vector<CkScalar>(coeffs_.begin(), coeffs_.begin() + trunc));
}

CkSeries series_add(const CkSeries& f, const CkSeries& g) {
    check_orders(f, g);
    const int n = std::min(f.trunc(), g.trunc());
    CkSeries out(f.order(), n);
    for (int d = 0; d <= n; ++d) out.set_coeff(d, f.coeff(d) + g.coeff(d));
    return out;
}

CkSeries series_scale(const CkSeries& f, const CkScalar& c) {
    CkSeries out(f.order(), f.trunc());
    for (int d = 0; d <= f.trunc(); ++d) out.set_coeff(d, f.coeff(d) * c);
    return out;
}

CkSeries series_mul(const CkSeries& f, const CkSeries& g) {
    check_orders(f, g);
    const int n = std::min(f.trunc(), g.trunc());
    CkSeries out(f.order(), n);
    for (int d = 0; d <= n; ++d) {
        CkScalar acc(f.order());
        for (int i = 0; i <= d; ++i) {
            const auto& a = f.coeff(i);
            const auto& b = g.coeff(d - i);
            if (a.is_zero() || b.is_zero()) continue;
            acc += ck_mul(a, b);
        }
        out.set_coeff(d, std::move(acc));
    }
    return out;
}

CkSeries series_compose(const CkSeries& f, const CkSeries& g) {
    check_orders(f, g);
    require(g.constant_term().is_zero(), ErrorKind::PreconditionViolated,
            "inner series of a composition must have zero constant term");
    const int n = std::min(f.trunc(), g.trunc());
    const int k = f.order();
    CkSeries out(k, n);
    out.set_coeff(0, f.coeff(0));
    // Horner-free accumulation over powers g^j; g^j starts at degree j, so j <= n suffices.
    CkSeries power = g.truncated(n);
    for (int j = 1; j <= n; ++j) {
        const auto& fj = f.coeff(j);
        if (!fj.is_zero()) {
            for (int d = j; d <= n; ++d) {
                out.set_coeff(d, out.coeff(d) + ck_mul(fj, power.coeff(d)));
            }
        }
        if (j < n) power = series_mul(power, g.truncated(n));
    }
    return out;
}

CkSeries series_comp_inverse(const CkSeries& f) {
    require(f.constant_term().is_zero(), ErrorKind::PreconditionViolated,
            "compositional inverse needs a zero constant term");
    require(f.trunc() >= 1, ErrorKind::InvalidArgument, "compositional inverse needs trunc >= 1");
    const int k = f.order();
    const int n = f.trunc();
    const CkScalar lead_inv = ck_inverse(f.coeff(1));
    CkSeries g(k, n);
    g.set_coeff(1, lead_inv);
    // Degree d of f(g) is f_1 g_d + (terms in g_1..g_{d-1}); solve for g_d.
    for (int d = 2; d <= n; ++d) {
        const CkSeries composed = series_compose(f.truncated(d), g.truncated(d));
        g.set_coeff(d, -ck_mul(composed.coeff(d), lead_inv));
    }
    return g;
}

CkSeries identity_series(int k, int trunc) {
    CkSeries s(k, trunc);
    if (trunc >= 1) s.set_coeff(1, CkScalar::unit(k));
    return s;
}

}  // namespace ifree
