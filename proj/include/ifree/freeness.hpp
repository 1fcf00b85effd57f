#pragma once

#include "ifree/convolution.hpp"
#include "ifree/cumulants.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ifree {

/// Noncommutative polynomial: finite map from words (the empty word is the constant) to
/// non-zero rational coefficients.
class NcPolynomial {
public:
    NcPolynomial() = default;
    static NcPolynomial constant(const Rational& c);
    static NcPolynomial variable(int index);
    static NcPolynomial monomial(Word word, const Rational& c = 1);

    const std::map<Word, Rational>& terms() const { return terms_; }
    void add_term(const Word& word, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    /// Longest word with a non-zero coefficient; -1 for the zero polynomial.
    int degree() const;
    int max_variable() const;

    NcPolynomial& operator+=(const NcPolynomial& other);
    NcPolynomial& operator*=(const Rational& c);
    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) {
        NcPolynomial negated = b;
        return a += (negated *= Rational(-1));
    }
    friend NcPolynomial operator*(NcPolynomial a, const Rational& c) { return a *= c; }
    /// Bilinear extension of word concatenation.
    friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
    friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

private:
    std::map<Word, Rational> terms_;
};

/// Derivation of the free algebra given by the images of the generators, extended by
/// D(vw) = D(v) w + v D(w).
struct Derivation {
    int num_vars = 0;
    std::vector<NcPolynomial> images;

    NcPolynomial apply(const NcPolynomial& p) const;
};

/// D^power(p).
NcPolynomial apply_derivation(const Derivation& derivation, const NcPolynomial& p, int power);

/// coloring[v-1] is the label of the subalgebra containing variable v.
using Coloring = std::vector<int>;

struct JointLaw {
    InfLaw law;
    Coloring coloring;
};

/// Joint law of free copies of the given laws, with variables numbered consecutively and
/// coloured by factor (1-based). Mixed cumulants vanish by construction.
JointLaw free_product_joint(std::span<const InfLaw> laws, int max_len);

/// φ̃(P) = Σ c_w φ̃(w).
CkScalar evaluate(const InfLaw& law, const NcPolynomial& p);

/// Law of the variables y_j = generators[j-1]: moment(y_{w_1}⋯y_{w_m}) = φ̃(P_{w_1}⋯P_{w_m}).
/// Throws InsufficientSupport when an expansion needs words longer than the law stores.
InfLaw polynomial_law(const InfLaw& law, std::span<const NcPolynomial> generators, int max_len);

/// Law of (a_1 + b_1, ..., a_n + b_n) for free tuples with laws μ and ν: cumulants add.
InfLaw sum_tuple_law(const InfLaw& mu, const InfLaw& nu);

/// κ̃_m(a_{u_1}b_{u_1}, ..., a_{u_m}b_{u_m}) = Σ_{p ∈ NC(m)} κ̃_p(a_{u_1},...) κ̃_{Kr(p)}(b_{u_1},...).
/// The a-variables are the colour-1 variables in increasing order, the b-variables the colour-2
/// ones; both lists must have the same length n. Throws PreconditionViolated when a mixed
/// cumulant is non-zero.
CumulantTable product_tuple_cumulants(const CumulantTable& joint, const Coloring& coloring);

/// Law of (a_1 b_1, ..., a_n b_n) for free tuples with laws μ and ν.
InfLaw product_tuple_law(const InfLaw& mu, const InfLaw& nu);

struct FreenessWitness {
    Word word;
    /// The alternating single-colour factors whose centred product was evaluated.
    std::vector<Word> factors;
    int component = 0;
    Rational value;
};

struct Verdict {
    bool pass = true;
    std::optional<FreenessWitness> witness;
};

/// For every word of length <= max_len, splits it into maximal single-colour runs m_1 ... m_l
/// and evaluates φ̃((m_1 - φ̃(m_1)) ⋯ (m_l - φ̃(m_l))) in C_k. Infinitesimal freeness of order k
/// up to the budget means all of these vanish. The first failure in length-then-lexicographic
/// order is reported.
Verdict check_inf_freeness(const InfLaw& joint, const Coloring& coloring, int max_len);

/// Order-k law with φ^(i)(w) = base(D^i(w)), for a base law of order 0. Throws
/// InsufficientSupport before any evaluation when the base law is too short.
InfLaw upgraded_law(const InfLaw& base, const Derivation& derivation, int k, int max_len);

/// κ_n(P_1, ..., P_n) of an order-0 law, through Möbius inversion on products of the arguments.
Rational cumulant_of_polynomials(const InfLaw& law, std::span<const NcPolynomial> arguments);

enum class ConvolutionMode { additive, multiplicative };

/// Derivative data of μ_t ⊞ ν_t or μ_t ⊠ ν_t from the derivative data of the factors.
InfLaw derivative_of_convolution(const InfLaw& mu, const InfLaw& nu, ConvolutionMode mode);

/// Order-0 law with moments Σ_i φ^(i)(w) t^i / i!.
InfLaw law_at_t(const InfLaw& derivatives, const Rational& t);

}  // namespace ifree
