#pragma once

#include "ifree/rational.hpp"

#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace ifree {

/// Element of the truncated algebra C_k = C[eps]/(eps^{k+1}), stored by its coordinates
/// (a^(0), ..., a^(k)) in the basis eps^i / i!.
///
/// In these coordinates the product is the Leibniz rule
///     (a*b)^(i) = sum_j binom(i, j) a^(j) b^(i-j),
/// so coordinate i of a C_k-valued moment or cumulant is its i-th derivative.
class CkScalar {
public:
    /// Zero element of C_k.
    explicit CkScalar(int k);
    explicit CkScalar(std::vector<Rational> coords);
    CkScalar(std::initializer_list<Rational> coords);

    static CkScalar unit(int k);
    static CkScalar epsilon(int k);
    /// c * 1_{C_k}.
    static CkScalar constant(int k, const Rational& c);
    /// Builds the element sum_i c_i eps^i from plain power-basis coefficients.
    static CkScalar from_power_basis(std::span<const Rational> coeffs);

    int order() const { return static_cast<int>(coords_.size()) - 1; }
    const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    std::span<const Rational> coords() const { return coords_; }
    /// Coefficients c_i of sum_i c_i eps^i, i.e. a^(i) / i!.
    std::vector<Rational> power_basis() const;

    bool is_zero() const;
    bool is_invertible() const { return coords_.front() != 0; }

    CkScalar& operator+=(const CkScalar& other);
    CkScalar& operator-=(const CkScalar& other);
    CkScalar& operator*=(const CkScalar& other);
    CkScalar& operator*=(const Rational& factor);

    friend CkScalar operator+(CkScalar a, const CkScalar& b) { return a += b; }
    friend CkScalar operator-(CkScalar a, const CkScalar& b) { return a -= b; }
    friend CkScalar operator*(CkScalar a, const CkScalar& b) { return a *= b; }
    friend CkScalar operator*(CkScalar a, const Rational& c) { return a *= c; }
    friend CkScalar operator*(const Rational& c, CkScalar a) { return a *= c; }
    CkScalar operator-() const;

    friend bool operator==(const CkScalar& a, const CkScalar& b) { return a.coords_ == b.coords_; }

private:
    std::vector<Rational> coords_;
};

CkScalar ck_mul(const CkScalar& a, const CkScalar& b);
/// Product of a non-empty list; throws InvalidArgument on an empty list.
CkScalar ck_prod_many(std::span<const CkScalar> factors);
/// Throws NotInvertible when a^(0) == 0.
CkScalar ck_inverse(const CkScalar& a);
CkScalar ck_pow(const CkScalar& a, int exponent);

/// Upper-triangular Toeplitz matrix with a^(j)/j! on the j-th superdiagonal.
std::vector<std::vector<Rational>> to_toeplitz(const CkScalar& a);

/// lambda = (lambda_1, ..., lambda_n) with non-negative entries summing to `target`.
struct LambdaVector {
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }
    int sum() const;
    int operator[](int j) const { return entries[static_cast<std::size_t>(j)]; }
    friend bool operator==(const LambdaVector&, const LambdaVector&) = default;
    friend auto operator<=>(const LambdaVector&, const LambdaVector&) = default;
};

/// All elements of Lambda_{n,i}, in lexicographically decreasing order.
std::vector<LambdaVector> lambda_set(int n, int i);
void for_each_lambda(int n, int i, const std::function<void(const LambdaVector&)>& visit);
/// i! / (lambda_1! ... lambda_n!) with i = sum(lambda).
Integer multinomial(const LambdaVector& lambda);

}  // namespace ifree
