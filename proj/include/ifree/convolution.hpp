#pragma once

#include "ifree/cumulants.hpp"
#include "ifree/series.hpp"

namespace ifree {

enum class SpecialSeriesKind { zeta, delta, moebius };

/// ζ (all coefficients 1), Δ (the series z) or Möb (the ⊛-inverse of ζ), truncated at `trunc`.
CkSeries special_series(SpecialSeriesKind kind, int k, int trunc);

/// Boxed convolution over C_k: γ_m = Σ_{p ∈ NC(m)} ∏_{E ∈ p} α_{|E|} ∏_{F ∈ Kr(p)} β_{|F|}.
/// Both inputs must have zero constant term; the result truncates at the smaller trunc.
CkSeries boxed_conv_ck(const CkSeries& f, const CkSeries& g);
/// Inverse for ⊛; throws NotInvertible unless the degree-1 coefficient is invertible.
CkSeries boxed_inverse(const CkSeries& f);

/// The type-B double sum over NC^(B)(m), for series of order 1 read as (α', α'').
CkSeries boxed_conv_type_b(const CkSeries& f, const CkSeries& g);
/// The type-k sum over NC^(i)(m) for each component i, weighted by C_i^λ / r(λ).
CkSeries boxed_conv_type_k(const CkSeries& f, const CkSeries& g);

/// R = M ⊛ Möb and M = R ⊛ ζ.
CkSeries r_from_moments(const CkSeries& moments);
CkSeries moments_from_r(const CkSeries& r_transform);

/// ℱ(f) = f^{<-1>}(z) / z; the result has a constant term and truncation trunc(f) - 1.
CkSeries fourier_transform(const CkSeries& f);
/// Recovers f from ℱ(f): f = (z ℱ(f))^{<-1>}.
CkSeries inverse_fourier_transform(const CkSeries& transform);
/// S-transform of an R-transform, ℱ(R).
inline CkSeries s_transform(const CkSeries& r_transform) { return fourier_transform(r_transform); }

/// Σ_n φ̃(x^n) z^n of a single-variable law, truncated at its max_len.
CkSeries moment_series(const InfLaw& law);
/// Σ_n κ̃_n z^n of a single-variable law.
CkSeries r_transform(const InfLaw& law);
/// Single-variable law with the given moment series.
InfLaw law_from_moment_series(const CkSeries& moments);

/// Law whose C_k cumulants are the sums of those of μ and ν (same k, same max_len, one variable).
InfLaw additive_convolve(const InfLaw& mu, const InfLaw& nu);
/// Law with R-transform R_μ ⊛ R_ν.
InfLaw multiplicative_convolve(const InfLaw& mu, const InfLaw& nu);
/// Same law through S_μ · S_ν; needs invertible first moments (NotInvertible otherwise).
InfLaw multiplicative_convolve_via_s(const InfLaw& mu, const InfLaw& nu);

enum class ExampleKind { semicircular, free_poisson };

/// semicircular: κ̃_2 = parameter and all other cumulants 0; free_poisson: κ̃_n = parameter for all n.
InfLaw example_law(ExampleKind kind, const CkScalar& parameter, int max_len);

}  // namespace ifree
