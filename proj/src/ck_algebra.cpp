#include "ifree/ck_algebra.hpp"

#include "ifree/errors.hpp"

#include <array>
#include <string>

namespace ifree {

namespace {

constexpr int kBinomTableSize = 61;

const std::array<std::array<unsigned long, kBinomTableSize>, kBinomTableSize>& binom_table() {
    static const auto table = [] {
        std::array<std::array<unsigned long, kBinomTableSize>, kBinomTableSize> t{};
        for (int n = 0; n < kBinomTableSize; ++n) {
            t[n][0] = 1;
            for (int j = 1; j <= n; ++j) t[n][j] = t[n - 1][j - 1] + (j < n ? t[n - 1][j] : 0);
        }
        return t;
    }();
    return table;
}

Integer small_binomial(int n, int j) {
    if (n < kBinomTableSize) return Integer(binom_table()[n][j]);
    return binomial(n, j);
}

void check_same_order(const CkScalar& a, const CkScalar& b) {
    if (a.order() != b.order()) {
        fail(ErrorKind::OrderMismatch, "C_k order mismatch: " + std::to_string(a.order()) + " vs " +
                                           std::to_string(b.order()));
    }
}

}  // namespace

CkScalar::CkScalar(int k) {
    require(k >= 0, ErrorKind::InvalidArgument, "C_k order must be non-negative");
    coords_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
}

CkScalar::CkScalar(std::vector<Rational> coords) : coords_(std::move(coords)) {
    require(!coords_.empty(), ErrorKind::InvalidArgument, "C_k element needs at least one coordinate");
}

CkScalar::CkScalar(std::initializer_list<Rational> coords) : CkScalar(std::vector<Rational>(coords)) {}

CkScalar CkScalar::unit(int k) { return constant(k, 1); }

CkScalar CkScalar::epsilon(int k) {
    CkScalar e(k);
    if (k >= 1) e.coords_[1] = 1;
    return e;
}

CkScalar CkScalar::constant(int k, const Rational& c) {
    CkScalar e(k);
    e.coords_[0] = c;
    return e;
}

CkScalar CkScalar::from_power_basis(std::span<const Rational> coeffs) {
    std::vector<Rational> coords(coeffs.begin(), coeffs.end());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        coords[i] *= Rational(factorial(static_cast<int>(i)));
    }
    return CkScalar(std::move(coords));
}

std::vector<Rational> CkScalar::power_basis() const {
    std::vector<Rational> out(coords_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] /= Rational(factorial(static_cast<int>(i)));
    return out;
}

bool CkScalar::is_zero() const {
    for (const auto& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

CkScalar& CkScalar::operator+=(const CkScalar& other) {
    check_same_order(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

CkScalar& CkScalar::operator-=(const CkScalar& other) {
    check_same_order(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

CkScalar& CkScalar::operator*=(const CkScalar& other) {
    *this = ck_mul(*this, other);
    return *this;
}

CkScalar& CkScalar::operator*=(const Rational& factor) {
    for (auto& c : coords_) c *= factor;
    return *this;
}

CkScalar CkScalar::operator-() const {
    CkScalar r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

CkScalar ck_mul(const CkScalar& a, const CkScalar& b) {
    check_same_order(a, b);
    const int k = a.order();
    std::vector<Rational> coords(static_cast<std::size_t>(k) + 1);
    Rational term;
    for (int i = 0; i <= k; ++i) {
        Rational acc = 0;
        for (int j = 0; j <= i; ++j) {
            if (a[j] == 0 || b[i - j] == 0) continue;
            term = a[j] * b[i - j];
            if (j != 0 && j != i) term *= Rational(small_binomial(i, j));
            acc += term;
        }
        coords[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return CkScalar(std::move(coords));
}

CkScalar ck_prod_many(std::span<const CkScalar> factors) {
    require(!factors.empty(), ErrorKind::InvalidArgument, "ck_prod_many needs at least one factor");
    CkScalar acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = ck_mul(acc, factors[i]);
    return acc;
}

CkScalar ck_inverse(const CkScalar& a) {
    if (!a.is_invertible()) fail(ErrorKind::NotInvertible, "C_k element with zero first coordinate");
    const int k = a.order();
    // Back-substitution on (a*x)^(i) = delta_{i0}, solved for x^(i) in increasing i.
    std::vector<Rational> x(static_cast<std::size_t>(k) + 1);
    const Rational inv0 = 1 / a[0];
    x[0] = inv0;
    for (int i = 1; i <= k; ++i) {
        Rational acc = 0;
        for (int j = 1; j <= i; ++j) {
            acc += Rational(small_binomial(i, j)) * a[j] * x[static_cast<std::size_t>(i - j)];
        }
        x[static_cast<std::size_t>(i)] = -acc * inv0;
    }
    return CkScalar(std::move(x));
}

CkScalar ck_pow(const CkScalar& a, int exponent) {
    require(exponent >= 0, ErrorKind::InvalidArgument, "negative exponent");
    CkScalar result = CkScalar::unit(a.order());
    CkScalar base = a;
    while (exponent > 0) {
        if (exponent & 1) result = ck_mul(result, base);
        exponent >>= 1;
        if (exponent > 0) base = ck_mul(base, base);
    }
    return result;
}

std::vector<std::vector<Rational>> to_toeplitz(const CkScalar& a) {
    const int k = a.order();
    const auto coeffs = a.power_basis();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(k) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(k) + 1, Rational(0)));
    for (int r = 0; r <= k; ++r) {
        for (int c = r; c <= k; ++c) m[r][c] = coeffs[static_cast<std::size_t>(c - r)];
    }
    return m;
}

int LambdaVector::sum() const {
    int s = 0;
    for (int e : entries) s += e;
    return s;
}

void for_each_lambda(int n, int i, const std::function<void(const LambdaVector&)>& visit) {
    require(n >= 0 && i >= 0, ErrorKind::InvalidArgument, "Lambda_{n,i} needs n, i >= 0");
    if (n == 0) {
        if (i == 0) visit(LambdaVector{});
        return;
    }
    LambdaVector current{std::vector<int>(static_cast<std::size_t>(n), 0)};
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == n - 1) {
            current.entries[static_cast<std::size_t>(pos)] = remaining;
            visit(current);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            current.entries[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, i);
}

std::vector<LambdaVector> lambda_set(int n, int i) {
    std::vector<LambdaVector> out;
    for_each_lambda(n, i, [&](const LambdaVector& l) { out.push_back(l); });
    return out;
}

Integer multinomial(const LambdaVector& lambda) {
    Integer r = factorial(lambda.sum());
    for (int e : lambda.entries) r /= factorial(e);
    return r;
}

}  // namespace ifree
