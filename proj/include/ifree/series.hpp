#pragma once

#include "ifree/ck_algebra.hpp"

#include <vector>

namespace ifree {

/// Truncated power series  c_0 + sum_{d=1}^{N} c_d z^d  with C_k coefficients.
///
/// Elements of Theta_{C_k} (moment series, R-transforms) have c_0 = 0; the constant term
/// exists for Fourier/S-transform outputs. Degrees above `trunc()` are unknown, so binary
/// operations truncate to the smaller of the two inputs. `trunc() == 0` is allowed and
/// denotes a series that only carries its constant term.
class CkSeries {
public:
    /// Zero series of order k truncated at degree trunc.
    CkSeries(int k, int trunc);
    /// Series with zero constant term and coefficients for degrees 1..coeffs.size().
    CkSeries(int k, std::vector<CkScalar> coeffs);
    CkSeries(int k, CkScalar constant, std::vector<CkScalar> coeffs);

    int order() const { return k_; }
    int trunc() const { return static_cast<int>(coeffs_.size()); }

    /// Coefficient of z^d, 0 <= d <= trunc().
    const CkScalar& coeff(int degree) const;
    void set_coeff(int degree, CkScalar value);
    const CkScalar& constant_term() const { return constant_; }
    const std::vector<CkScalar>& coeffs() const { return coeffs_; }

    bool has_constant_term() const { return !constant_.is_zero(); }
    CkSeries truncated(int trunc) const;

    friend bool operator==(const CkSeries&, const CkSeries&) = default;

private:
    int k_;
    CkScalar constant_;
    std::vector<CkScalar> coeffs_;
};

CkSeries series_add(const CkSeries& f, const CkSeries& g);
CkSeries series_scale(const CkSeries& f, const CkScalar& c);
/// Cauchy product, truncated at min(f.trunc(), g.trunc()).
CkSeries series_mul(const CkSeries& f, const CkSeries& g);
/// f(g(z)); requires g to have zero constant term.
CkSeries series_compose(const CkSeries& f, const CkSeries& g);
/// Compositional inverse: f(f^{<-1>}(z)) = z up to trunc. Requires zero constant term and an
/// invertible degree-1 coefficient (NotInvertible otherwise).
CkSeries series_comp_inverse(const CkSeries& f);

/// The series z (identity for composition).
CkSeries identity_series(int k, int trunc);

}  // namespace ifree
