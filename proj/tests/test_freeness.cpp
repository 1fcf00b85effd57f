#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ifree/errors.hpp"
#include "ifree/freeness.hpp"
#include "random_data.hpp"

using namespace ifree;

namespace {

NcPolynomial x(int v) { return NcPolynomial::variable(v); }

/// Random polynomial of degree <= 2 in the listed variables.
NcPolynomial random_polynomial(std::mt19937& rng, const std::vector<int>& vars) {
    NcPolynomial out = NcPolynomial::constant(oracle::random_rational(rng, 2));
    for (int v : vars) out.add_term({v}, oracle::random_rational(rng, 2));
    for (int v : vars)
        for (int u : vars) out.add_term({v, u}, oracle::random_rational(rng, 2));
    return out;
}

/// Joint cumulant table for two free n-tuples: variables 1..n are the a-tuple, n+1..2n the b-tuple.
CumulantTable free_pair_cumulants(std::mt19937& rng, int k, int n, int max_len) {
    const auto a = fixture::random_cumulants(rng, k, n, max_len);
    const auto b = fixture::random_cumulants(rng, k, n, max_len);
    CumulantTable joint(k, 2 * n, max_len);
    for (const auto& w : all_words(2 * n, max_len)) {
        const bool first = std::all_of(w.begin(), w.end(), [&](int v) { return v <= n; });
        const bool second = std::all_of(w.begin(), w.end(), [&](int v) { return v > n; });
        Word local = w;
        if (second)
            for (auto& v : local) v -= n;
        if (first) joint.set_cumulant(w, a.cumulant(local));
        if (second) joint.set_cumulant(w, b.cumulant(local));
    }
    return joint;
}

Coloring pair_coloring(int n) {
    Coloring out(static_cast<std::size_t>(n), 1);
    out.resize(static_cast<std::size_t>(2 * n), 2);
    return out;
}

bool has_mixed_nonzero_cumulant(const InfLaw& law, const Coloring& coloring) {
    const auto c = moments_to_cumulants(law);
    for (const auto& w : all_words(law.num_vars(), law.max_len())) {
        const int colour = coloring[static_cast<std::size_t>(w.front() - 1)];
        const bool mixed = std::any_of(w.begin(), w.end(), [&](int v) { return coloring[static_cast<std::size_t>(v - 1)] != colour; });
        if (mixed && !c.cumulant(w).is_zero()) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("noncommutative polynomial arithmetic") {
    auto p = x(1) + x(2);
    CHECK(p.terms().size() == 2);
    p += x(1) * Rational(-1);
    CHECK(p == x(2));
    CHECK((x(1) - x(1)).is_zero());
    const auto q = (x(1) + NcPolynomial::constant(2)) * x(2);
    CHECK(q.terms().at(Word{1, 2}) == 1);
    CHECK(q.terms().at(Word{2}) == 2);
    CHECK(q.degree() == 2);
    CHECK(NcPolynomial().degree() == -1);
    CHECK(x(2) * x(1) != x(1) * x(2));
    CHECK_THROWS_AS(x(0), Error);
}

TEST_CASE("apply_derivation examples") {
    const Derivation euler{1, {x(1)}};
    const auto square = NcPolynomial::monomial({1, 1});
    CHECK(apply_derivation(euler, square, 0) == square);
    CHECK(apply_derivation(euler, square, 1) == square * Rational(2));
    CHECK(apply_derivation(euler, square, 3) == square * Rational(8));
    const Derivation unit{1, {NcPolynomial::constant(1)}};
    CHECK(apply_derivation(unit, NcPolynomial::monomial({1, 1, 1}), 1) == square * Rational(3));
    CHECK(apply_derivation(unit, NcPolynomial::monomial({1, 1, 1}), 4).is_zero());

    // Leibniz on a product of arbitrary polynomials.
    std::mt19937 rng(51);
    const Derivation d{2, {random_polynomial(rng, {1, 2}), random_polynomial(rng, {1, 2})}};
    const auto p = random_polynomial(rng, {1, 2});
    const auto q = random_polynomial(rng, {1, 2});
    CHECK(d.apply(p * q) == d.apply(p) * q + p * d.apply(q));
    CHECK_THROWS_AS(apply_derivation(d, p, -1), Error);
}

TEST_CASE("free product of laws") {
    std::mt19937 rng(52);
    const auto single = fixture::random_law(rng, 1, 2, 4);
    const auto joint_single = free_product_joint(std::vector<InfLaw>{single}, 4);
    CHECK(joint_single.law == single);
    CHECK(joint_single.coloring == Coloring{1, 1});

    const auto s = example_law(ExampleKind::semicircular, CkScalar{1}, 4);
    const auto pair = free_product_joint(std::vector<InfLaw>{s, s}, 4);
    CHECK(pair.law.moment({1, 2, 1, 2})[0] == 0);
    CHECK(pair.law.moment({1, 1, 2, 2})[0] == 1);

    for (int k = 0; k <= 2; ++k) {
        const auto mu = fixture::random_law(rng, k, 2, 5);
        const auto nu = fixture::random_law(rng, k, 1, 5);
        const auto joint = free_product_joint(std::vector<InfLaw>{mu, nu}, 5);
        CHECK(joint.coloring == Coloring{1, 1, 2});
        for (const auto& w : all_words(2, 5)) CHECK(joint.law.moment(w) == mu.moment(w));
        for (const auto& w : all_words(1, 5)) CHECK(joint.law.moment(Word(w.size(), 3)) == nu.moment(w));
        CHECK_FALSE(has_mixed_nonzero_cumulant(joint.law, joint.coloring));
    }
    CHECK_THROWS_AS(free_product_joint(std::vector<InfLaw>{InfLaw(0, 1, 3), InfLaw(1, 1, 3)}, 3), Error);
    CHECK_THROWS_AS(free_product_joint(std::vector<InfLaw>{InfLaw(0, 1, 3)}, 4), Error);
}

TEST_CASE("product tuple cumulants") {
    std::mt19937 rng(53);
    for (int k = 0; k <= 2; ++k) {
        const auto joint = free_pair_cumulants(rng, k, 2, 8);
        CumulantTable short_joint(k, 4, 4);
        for (const auto& w : all_words(4, 4)) short_joint.set_cumulant(w, joint.cumulant(w));
        const auto products = product_tuple_cumulants(short_joint, pair_coloring(2));
        CHECK(products.cumulant({1}) == ck_mul(joint.cumulant({1}), joint.cumulant({3})));
        for (const auto& u : all_words(2, 4)) {
            Word interleaved;
            std::vector<int> grouping;
            for (int v : u) {
                interleaved.push_back(v);
                interleaved.push_back(v + 2);
                grouping.push_back(static_cast<int>(interleaved.size()));
            }
            CHECK(products.cumulant(u) == cumulant_of_products(joint, grouping, interleaved));
        }
    }
    auto broken = free_pair_cumulants(rng, 1, 1, 3);
    broken.set_cumulant({1, 2}, CkScalar{0, 1});
    CHECK_THROWS_AS(product_tuple_cumulants(broken, pair_coloring(1)), Error);
    CHECK_THROWS_AS(product_tuple_cumulants(broken, Coloring{1, 1}), Error);
    CHECK_THROWS_AS(product_tuple_cumulants(broken, Coloring{1}), Error);
}

TEST_CASE("tuple sums and products agree with explicit polynomial laws") {
    std::mt19937 rng(54);
    for (int k = 0; k <= 2; ++k) {
        const auto mu = fixture::random_law(rng, k, 2, 6);
        const auto nu = fixture::random_law(rng, k, 2, 6);
        const auto joint = free_product_joint(std::vector<InfLaw>{mu, nu}, 6);
        const std::vector<NcPolynomial> sums{x(1) + x(3), x(2) + x(4)};
        const std::vector<NcPolynomial> products{x(1) * x(3), x(2) * x(4)};
        const std::vector<NcPolynomial> identity{x(1), x(2)};
        CHECK(polynomial_law(joint.law, sums, 4) ==
              sum_tuple_law(polynomial_law(mu, identity, 4), polynomial_law(nu, identity, 4)));
        CHECK(polynomial_law(joint.law, products, 3) ==
              product_tuple_law(polynomial_law(mu, identity, 3), polynomial_law(nu, identity, 3)));
    }
    CHECK_THROWS_AS(polynomial_law(InfLaw(0, 2, 3), std::vector<NcPolynomial>{x(1) * x(2)}, 2), Error);
}

TEST_CASE("freeness checker accepts free products") {
    std::mt19937 rng(55);
    for (int k = 0; k <= 2; ++k) {
        const auto joint = free_product_joint(
            std::vector<InfLaw>{fixture::random_law(rng, k, 1, 4), fixture::random_law(rng, k, 2, 4)}, 4);
        const auto verdict = check_inf_freeness(joint.law, joint.coloring, 4);
        CHECK(verdict.pass);
        CHECK_FALSE(verdict.witness.has_value());
    }
}

TEST_CASE("freeness checker rejects classically independent variables") {
    // Commuting independent symmetric signs: φ(w) = 1 when each letter occurs an even number of times.
    InfLaw law(0, 2, 4);
    for (const auto& w : all_words(2, 4)) {
        const auto ones = std::count(w.begin(), w.end(), 1);
        const auto twos = static_cast<long>(w.size()) - ones;
        law.set_moment(w, CkScalar{Rational(ones % 2 == 0 && twos % 2 == 0 ? 1 : 0)});
    }
    CHECK(law.moment({1, 2}) == ck_mul(law.moment({1}), law.moment({2})));
    const auto verdict = check_inf_freeness(law, Coloring{1, 2}, 4);
    CHECK_FALSE(verdict.pass);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->word == Word{1, 2, 1, 2});
    CHECK(verdict.witness->factors == std::vector<Word>{{1}, {2}, {1}, {2}});
    CHECK(verdict.witness->component == 0);
    CHECK(verdict.witness->value == 1);
}

TEST_CASE("freeness checker and mixed cumulants agree under perturbations") {
    std::mt19937 rng(56);
    int rejected = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const int k = trial % 3;
        auto joint = free_product_joint(
            std::vector<InfLaw>{fixture::random_law(rng, k, 1, 4), fixture::random_law(rng, k, 1, 4)}, 4);
        std::vector<Word> mixed;
        for (const auto& w : all_words(2, 4))
            if (std::count(w.begin(), w.end(), 1) != 0 && std::count(w.begin(), w.end(), 2) != 0) mixed.push_back(w);
        const auto& target = mixed[std::uniform_int_distribution<std::size_t>(0, mixed.size() - 1)(rng)];
        const int component = std::uniform_int_distribution<int>(0, k)(rng);
        const auto original = joint.law.moment(target);
        std::vector<Rational> bumped(original.coords().begin(), original.coords().end());
        bumped[static_cast<std::size_t>(component)] += 1;
        joint.law.set_moment(target, CkScalar(bumped));
        const auto verdict = check_inf_freeness(joint.law, joint.coloring, 4);
        CHECK(verdict.pass == !has_mixed_nonzero_cumulant(joint.law, joint.coloring));
        if (!verdict.pass) {
            ++rejected;
            const auto& w = verdict.witness->word;
            CHECK(w.size() <= target.size());
            CHECK(verdict.witness->value != 0);
        }
    }
    CHECK(rejected == 12);
}

TEST_CASE("upgraded laws") {
    std::mt19937 rng(57);
    const auto base = fixture::random_law(rng, 0, 1, 6);
    const Derivation zero{1, {NcPolynomial()}};
    const auto flat = upgraded_law(base, zero, 2, 4);
    const auto flat_cumulants = moments_to_cumulants(flat);
    for (const auto& w : all_words(1, 4)) {
        CHECK(flat.moment(w)[0] == base.moment(w)[0]);
        CHECK(flat.moment(w)[1] == 0);
        CHECK(flat.moment(w)[2] == 0);
        CHECK(flat_cumulants.cumulant(w)[1] == 0);
        CHECK(flat_cumulants.cumulant(w)[2] == 0);
    }
    const auto euler = upgraded_law(base, Derivation{1, {x(1)}}, 1, 6);
    for (const auto& w : all_words(1, 6)) CHECK(euler.moment(w)[1] == Rational(static_cast<long>(w.size())) * base.moment(w)[0]);

    const Derivation quadratic{1, {x(1) * x(1)}};
    CHECK_THROWS_AS(upgraded_law(base, quadratic, 3, 4), Error);
    CHECK_NOTHROW(upgraded_law(base, quadratic, 2, 4));
    CHECK_THROWS_AS(upgraded_law(euler, quadratic, 1, 2), Error);
}

TEST_CASE("upgraded cumulants follow the Leibniz expansion") {
    std::mt19937 rng(58);
    for (int trial = 0; trial < 2; ++trial) {
        const auto base = fixture::random_law(rng, 0, 2, 6);
        const Derivation d{2, {random_polynomial(rng, {1, 2}), random_polynomial(rng, {1, 2})}};
        const auto upgraded = upgraded_law(base, d, 2, 4);
        const auto cumulants = moments_to_cumulants(upgraded);
        for (const auto& w : all_words(2, 4)) {
            for (int i = 0; i <= 2; ++i) {
                Rational expected = 0;
                for_each_lambda(static_cast<int>(w.size()), i, [&](const LambdaVector& lambda) {
                    std::vector<NcPolynomial> arguments;
                    for (std::size_t j = 0; j < w.size(); ++j) arguments.push_back(apply_derivation(d, x(w[j]), lambda.entries[j]));
                    expected += Rational(multinomial(lambda)) * cumulant_of_polynomials(base, arguments);
                });
                CHECK(cumulants.cumulant(w)[i] == expected);
            }
        }
    }
}

TEST_CASE("derivations preserving free subalgebras keep them infinitesimally free") {
    std::mt19937 rng(59);
    const auto joint = free_product_joint(
        std::vector<InfLaw>{fixture::random_law(rng, 0, 1, 6), fixture::random_law(rng, 0, 1, 6)}, 6);
    const Derivation d{2, {random_polynomial(rng, {1}), random_polynomial(rng, {2})}};
    const auto upgraded = upgraded_law(joint.law, d, 2, 4);
    CHECK(check_inf_freeness(upgraded, joint.coloring, 4).pass);
    const Derivation mixing{2, {x(2), NcPolynomial()}};
    CHECK_FALSE(check_inf_freeness(upgraded_law(joint.law, mixing, 1, 4), joint.coloring, 4).pass);
}

TEST_CASE("law_at_t and derivative_of_convolution") {
    InfLaw derivs(2, 1, 1);
    derivs.set_moment({1}, CkScalar{3, 5, 7});
    CHECK(law_at_t(derivs, 0).moment({1}) == CkScalar{3});
    CHECK(law_at_t(derivs, 2).moment({1}) == CkScalar{3 + 2 * 5 + 2 * 7});
    InfLaw first(1, 1, 1);
    first.set_moment({1}, CkScalar{3, 5});
    CHECK(law_at_t(first, 1).moment({1}) == CkScalar{8});

    const auto mu = example_law(ExampleKind::semicircular, CkScalar{1, 1}, 4);
    const auto nu = example_law(ExampleKind::semicircular, CkScalar{2, 3}, 4);
    const auto sum = derivative_of_convolution(mu, nu, ConvolutionMode::additive);
    CHECK(sum.moment({1, 1}) == CkScalar{3, 4});
    CHECK(derivative_of_convolution(mu, nu, ConvolutionMode::multiplicative) == multiplicative_convolve(mu, nu));
    const auto mu0 = example_law(ExampleKind::semicircular, CkScalar{1}, 4);
    const auto nu0 = example_law(ExampleKind::semicircular, CkScalar{2}, 4);
    CHECK(derivative_of_convolution(mu0, nu0, ConvolutionMode::additive) == additive_convolve(mu0, nu0));
}
