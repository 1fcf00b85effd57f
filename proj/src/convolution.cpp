#include "ifree/convolution.hpp"

#include "ifree/errors.hpp"
#include "ifree/type_k_partitions.hpp"

#include <algorithm>
#include <string>

namespace ifree {

namespace {

void require_theta(const CkSeries& f, const char* what) {
    require(f.constant_term().is_zero(), ErrorKind::PreconditionViolated,
            std::string(what) + " must have zero constant term");
}

void require_same_order(const CkSeries& f, const CkSeries& g) {
    require(f.order() == g.order(), ErrorKind::OrderMismatch,
            "series orders differ: " + std::to_string(f.order()) + " vs " + std::to_string(g.order()));
}

CkScalar block_product(const CkSeries& f, const SetPartition& p, CkScalar acc) {
    for (const auto& block : p.blocks()) {
        if (acc.is_zero()) break;
        acc = ck_mul(acc, f.coeff(static_cast<int>(block.size())));
    }
    return acc;
}

/// Coefficient m of f ⊛ g, reading only degrees up to m.
CkScalar boxed_coefficient(const CkSeries& f, const CkSeries& g, int m) {
    CkScalar sum(f.order());
    for (const auto& p : enumerate_nc(m)) {
        const auto left = block_product(f, p, CkScalar::unit(f.order()));
        if (left.is_zero()) continue;
        sum += block_product(g, kreweras(p), left);
    }
    return sum;
}

void require_single_variable(const InfLaw& law) {
    require(law.num_vars() == 1, ErrorKind::InvalidArgument, "convolution of laws needs single-variable laws");
}

void require_compatible(const InfLaw& mu, const InfLaw& nu) {
    require_single_variable(mu);
    require_single_variable(nu);
    require(mu.order() == nu.order(), ErrorKind::OrderMismatch, "laws have different orders");
    require(mu.max_len() == nu.max_len(), ErrorKind::SizeMismatch, "laws have different truncations");
}

}  // namespace

CkSeries special_series(SpecialSeriesKind kind, int k, int trunc) {
    require(trunc >= 1, ErrorKind::InvalidArgument, "special series need trunc >= 1");
    CkSeries out(k, trunc);
    switch (kind) {
        case SpecialSeriesKind::delta:
            out.set_coeff(1, CkScalar::unit(k));
            return out;
        case SpecialSeriesKind::zeta:
            for (int d = 1; d <= trunc; ++d) out.set_coeff(d, CkScalar::unit(k));
            return out;
        case SpecialSeriesKind::moebius:
            return boxed_inverse(special_series(SpecialSeriesKind::zeta, k, trunc));
    }
    return out;
}

CkSeries boxed_conv_ck(const CkSeries& f, const CkSeries& g) {
    require_same_order(f, g);
    require_theta(f, "left operand");
    require_theta(g, "right operand");
    const int n = std::min(f.trunc(), g.trunc());
    CkSeries out(f.order(), n);
    for (int m = 1; m <= n; ++m) out.set_coeff(m, boxed_coefficient(f, g, m));
    return out;
}

CkSeries boxed_inverse(const CkSeries& f) {
    require_theta(f, "series");
    require(f.trunc() >= 1, ErrorKind::InvalidArgument, "boxed inverse needs trunc >= 1");
    const int k = f.order();
    const auto lead_inv = ck_inverse(f.coeff(1));
    CkSeries g(k, f.trunc());
    // Only p = 0_m pairs g_m with f; its weight is f_1^m.
    for (int m = 1; m <= f.trunc(); ++m) {
        const auto partial = boxed_coefficient(f, g, m);
        const auto target = m == 1 ? CkScalar::unit(k) : CkScalar(k);
        g.set_coeff(m, ck_mul(target - partial, ck_pow(lead_inv, m)));
    }
    return g;
}

CkSeries boxed_conv_type_b(const CkSeries& f, const CkSeries& g) {
    require(f.order() == 1 && g.order() == 1, ErrorKind::OrderMismatch, "type-B boxed convolution needs order 1");
    require_theta(f, "left operand");
    require_theta(g, "right operand");
    const int n = std::min(f.trunc(), g.trunc());
    auto primed = [](const CkSeries& s, std::size_t size) { return s.coeff(static_cast<int>(size))[0]; };
    auto double_primed = [](const CkSeries& s, std::size_t size) { return s.coeff(static_cast<int>(size))[1]; };
    // One representative per pair {X, -X}: the block whose minimum is smaller.
    auto pair_product = [&](const CkSeries& s, const SetPartition& part, int m) {
        Rational acc = 1;
        for (const auto& block : part.blocks()) {
            Block mirrored;
            for (int x : block) mirrored.push_back((x - 1 + m) % (2 * m) + 1);
            std::sort(mirrored.begin(), mirrored.end());
            if (mirrored == block || mirrored.front() < block.front()) continue;
            acc *= primed(s, block.size());
        }
        return acc;
    };
    CkSeries out(1, n);
    for (int m = 1; m <= n; ++m) {
        Rational gamma_primed = 0;
        for (const auto& p : enumerate_nc(m)) {
            Rational term = 1;
            for (const auto& block : p.blocks()) term *= primed(f, block.size());
            const auto kr = kreweras(p);
            for (const auto& block : kr.blocks()) term *= primed(g, block.size());
            gamma_primed += term;
        }
        Rational gamma_double = 0;
        for (const auto& pi : enumerate_type_k(m, 1)) {
            const auto& part = pi.partition();
            const auto& kr = pi.kreweras_complement();
            Rational term = pair_product(f, part, m) * pair_product(g, kr, m);
            if (const auto zero = zero_block(part, m)) {
                term *= double_primed(f, zero->size() / 2);
            } else {
                const auto kr_zero = zero_block(kr, m);
                require(kr_zero.has_value(), ErrorKind::PreconditionViolated, "neither side has a zero-block");
                term *= double_primed(g, kr_zero->size() / 2);
            }
            gamma_double += term;
        }
        out.set_coeff(m, CkScalar{gamma_primed, gamma_double});
    }
    return out;
}

CkSeries boxed_conv_type_k(const CkSeries& f, const CkSeries& g) {
    require_same_order(f, g);
    require_theta(f, "left operand");
    require_theta(g, "right operand");
    const int k = f.order();
    const int n = std::min(f.trunc(), g.trunc());
    CkSeries out(k, n);
    for (int m = 1; m <= n; ++m) {
        std::vector<Rational> coords(static_cast<std::size_t>(k) + 1, Rational(0));
        for (int i = 0; i <= k; ++i) {
            for (const auto& p : enumerate_nc(m)) {
                const auto sep = ordered_blocks(p).sep;
                const auto parts = static_cast<std::size_t>(p.num_blocks());
                for (const auto& pi : type_k_fiber(p, i)) {
                    const auto& shape = pi.shape();
                    Rational term(multinomial(shape));
                    term /= r_of_shape(shape, m, i, p);
                    for (std::size_t j = 0; j < sep.size() && term != 0; ++j) {
                        const auto& source = j < parts ? f : g;
                        term *= source.coeff(static_cast<int>(sep[j].elements.size()))[shape.entries[j]];
                    }
                    coords[static_cast<std::size_t>(i)] += term;
                }
            }
        }
        out.set_coeff(m, CkScalar(std::move(coords)));
    }
    return out;
}

CkSeries r_from_moments(const CkSeries& moments) {
    return boxed_conv_ck(moments, special_series(SpecialSeriesKind::moebius, moments.order(), moments.trunc()));
}

CkSeries moments_from_r(const CkSeries& r_transform) {
    return boxed_conv_ck(r_transform, special_series(SpecialSeriesKind::zeta, r_transform.order(), r_transform.trunc()));
}

CkSeries fourier_transform(const CkSeries& f) {
    const auto inverse = series_comp_inverse(f);
    std::vector<CkScalar> shifted(inverse.coeffs().begin() + 1, inverse.coeffs().end());
    return CkSeries(f.order(), inverse.coeff(1), std::move(shifted));
}

CkSeries inverse_fourier_transform(const CkSeries& transform) {
    std::vector<CkScalar> raised{transform.constant_term()};
    raised.insert(raised.end(), transform.coeffs().begin(), transform.coeffs().end());
    return series_comp_inverse(CkSeries(transform.order(), std::move(raised)));
}

CkSeries moment_series(const InfLaw& law) {
    require_single_variable(law);
    CkSeries out(law.order(), law.max_len());
    for (int d = 1; d <= law.max_len(); ++d) out.set_coeff(d, law.moment(Word(static_cast<std::size_t>(d), 1)));
    return out;
}

CkSeries r_transform(const InfLaw& law) { return r_from_moments(moment_series(law)); }

InfLaw law_from_moment_series(const CkSeries& moments) {
    require_theta(moments, "moment series");
    InfLaw law(moments.order(), 1, moments.trunc());
    for (int d = 1; d <= moments.trunc(); ++d) law.set_moment(Word(static_cast<std::size_t>(d), 1), moments.coeff(d));
    return law;
}

InfLaw additive_convolve(const InfLaw& mu, const InfLaw& nu) {
    require_compatible(mu, nu);
    return law_from_moment_series(moments_from_r(series_add(r_transform(mu), r_transform(nu))));
}

InfLaw multiplicative_convolve(const InfLaw& mu, const InfLaw& nu) {
    require_compatible(mu, nu);
    return law_from_moment_series(moments_from_r(boxed_conv_ck(r_transform(mu), r_transform(nu))));
}

InfLaw multiplicative_convolve_via_s(const InfLaw& mu, const InfLaw& nu) {
    require_compatible(mu, nu);
    const auto product = series_mul(s_transform(r_transform(mu)), s_transform(r_transform(nu)));
    return law_from_moment_series(moments_from_r(inverse_fourier_transform(product)));
}

InfLaw example_law(ExampleKind kind, const CkScalar& parameter, int max_len) {
    CumulantTable cumulants(parameter.order(), 1, max_len);
    for (int d = 1; d <= max_len; ++d) {
        const bool active = kind == ExampleKind::free_poisson || d == 2;
        if (active) cumulants.set_cumulant(Word(static_cast<std::size_t>(d), 1), parameter);
    }
    return cumulants_to_moments(cumulants);
}

}  // namespace ifree
