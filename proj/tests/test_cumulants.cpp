#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ifree/cumulants.hpp"
#include "ifree/errors.hpp"
#include "ifree/freeness.hpp"
#include "ifree/type_k_partitions.hpp"
#include "random_data.hpp"

using namespace ifree;

namespace {

/// Moment by summing over all set partitions filtered for crossings, with power-basis products.
CkScalar moment_by_brute_force(const CumulantTable& c, const Word& w) {
    CkScalar sum(c.order());
    for (const auto& p : oracle::all_set_partitions(static_cast<int>(w.size()))) {
        if (oracle::has_crossing(p)) continue;
        CkScalar term = CkScalar::unit(c.order());
        for (const auto& block : p.blocks()) term = fixture::power_basis_product(term, c.cumulant(restrict_word(w, block)));
        sum += term;
    }
    return sum;
}

}  // namespace

TEST_CASE("cumulants_to_moments examples") {
    CumulantTable c(1, 2, 2);
    c.set_cumulant({1}, {2, 1});
    c.set_cumulant({2}, {3, -1});
    c.set_cumulant({1, 2}, {5, 7});
    const auto law = cumulants_to_moments(c);
    CHECK(law.moment({1}) == CkScalar{2, 1});
    CHECK(law.moment({1, 2}) == CkScalar{5, 7} + ck_mul({2, 1}, {3, -1}));
    CHECK(law.moment({}) == CkScalar::unit(1));

    CumulantTable semicircle(0, 1, 6);
    semicircle.set_cumulant({1, 1}, {1});
    const auto s = cumulants_to_moments(semicircle);
    const std::vector<Rational> expected{0, 1, 0, 2, 0, 5};
    for (int n = 1; n <= 6; ++n) CHECK(s.moment(Word(static_cast<std::size_t>(n), 1))[0] == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("cumulants_to_moments matches the brute-force sum over all set partitions") {
    std::mt19937 rng(11);
    for (int k = 0; k <= 2; ++k) {
        const auto c = fixture::random_cumulants(rng, k, 2, 5);
        const auto law = cumulants_to_moments(c);
        for (const auto& w : all_words(2, 5)) CHECK(law.moment(w) == moment_by_brute_force(c, w));
    }
}

TEST_CASE("moments_to_cumulants inverts cumulants_to_moments") {
    std::mt19937 rng(12);
    for (int k = 0; k <= 2; ++k) {
        const auto c1 = fixture::random_cumulants(rng, k, 1, 6);
        CHECK(moments_to_cumulants(cumulants_to_moments(c1)) == c1);
        const auto c2 = fixture::random_cumulants(rng, k, 2, 5);
        CHECK(moments_to_cumulants(cumulants_to_moments(c2)) == c2);
    }
}

TEST_CASE("second cumulant is the covariance") {
    std::mt19937 rng(13);
    for (int k = 0; k <= 2; ++k) {
        const auto law = fixture::random_law(rng, k, 2, 2);
        const auto c = moments_to_cumulants(law);
        CHECK(c.cumulant({1, 2}) == law.moment({1, 2}) - ck_mul(law.moment({1}), law.moment({2})));
    }
}

TEST_CASE("cumulants with a unit argument vanish") {
    std::mt19937 rng(14);
    for (int k = 0; k <= 2; ++k) {
        const auto base = fixture::random_law(rng, k, 2, 5);
        InfLaw extended(k, 3, 5);
        for (const auto& w : all_words(3, 5)) {
            Word kept;
            for (int v : w)
                if (v != 3) kept.push_back(v);
            extended.set_moment(w, base.moment(kept));
        }
        const auto c = moments_to_cumulants(extended);
        CHECK(c.cumulant({3}) == CkScalar::unit(k));
        for (const auto& w : all_words(3, 5)) {
            if (w.size() >= 2 && std::find(w.begin(), w.end(), 3) != w.end()) CHECK(c.cumulant(w).is_zero());
        }
    }
}

TEST_CASE("kappa_pi examples") {
    std::mt19937 rng(15);
    const auto c = fixture::random_cumulants(rng, 2, 2, 3);
    const Word w{1, 2, 1};
    CHECK(kappa_pi(c, SetPartition::full(3), w) == c.cumulant(w));
    CHECK(kappa_pi(c, SetPartition::singletons(3), w) == ck_prod_many(std::vector<CkScalar>{c.cumulant({1}), c.cumulant({2}), c.cumulant({1})}));
    CHECK(kappa_pi(c, SetPartition(3, {{1, 3}, {2}}), w) == ck_mul(c.cumulant({1, 1}), c.cumulant({2})));
    CHECK_THROWS_AS(kappa_pi(c, SetPartition::full(2), w), Error);
}

TEST_CASE("cumulant_of_products examples") {
    std::mt19937 rng(16);
    const auto c = fixture::random_cumulants(rng, 1, 3, 3);
    const Word w{1, 2, 3};
    CHECK(cumulant_of_products(c, std::vector<int>{1, 2, 3}, w) == c.cumulant(w));
    CHECK(cumulant_of_products(c, std::vector<int>{2}, Word{1, 2}) ==
          c.cumulant({1, 2}) + ck_mul(c.cumulant({1}), c.cumulant({2})));
    CHECK(cumulant_of_products(c, std::vector<int>{2, 3}, w) ==
          c.cumulant(w) + ck_mul(c.cumulant({1}), c.cumulant({2, 3})) + ck_mul(c.cumulant({1, 3}), c.cumulant({2})));
    CHECK_THROWS_AS(cumulant_of_products(c, std::vector<int>{2, 2}, w), Error);
    CHECK_THROWS_AS(cumulant_of_products(c, std::vector<int>{1, 2}, w), Error);
}

TEST_CASE("cumulant_of_products equals the cumulants of an explicit product law") {
    std::mt19937 rng(17);
    for (int k = 0; k <= 2; ++k) {
        const auto c = fixture::random_cumulants(rng, k, 3, 6);
        const auto law = cumulants_to_moments(c);
        // y1 = x1 x2, y2 = x3.
        const std::vector<NcPolynomial> generators{NcPolynomial::monomial({1, 2}), NcPolynomial::variable(3)};
        const auto products = moments_to_cumulants(polynomial_law(law, generators, 3));
        for (const auto& u : all_words(2, 3)) {
            Word expanded;
            std::vector<int> grouping;
            for (int y : u) {
                if (y == 1) expanded.insert(expanded.end(), {1, 2});
                else expanded.push_back(3);
                grouping.push_back(static_cast<int>(expanded.size()));
            }
            CHECK(cumulant_of_products(c, grouping, expanded) == products.cumulant(u));
        }
    }
}

TEST_CASE("infinitesimal_component reads coordinates") {
    const CkScalar x{3, 5, 7};
    CHECK(infinitesimal_component(x, 0) == 3);
    CHECK(infinitesimal_component(x, 2) == 7);
    CHECK_THROWS_AS(infinitesimal_component(x, 3), Error);
    CHECK_THROWS_AS(infinitesimal_component(x, -1), Error);

    std::mt19937 rng(18);
    const auto c = fixture::random_cumulants(rng, 2, 2, 3);
    std::vector<std::map<Word, Rational>> slices;
    for (int i = 0; i <= 2; ++i) slices.push_back(infinitesimal_component(c, i));
    for (const auto& w : all_words(2, 3)) CHECK(CkScalar{slices[0][w], slices[1][w], slices[2][w]} == c.cumulant(w));
}

TEST_CASE("order-0 slice of a C_k law is the classical moment-cumulant pair") {
    std::mt19937 rng(19);
    const auto law = fixture::random_law(rng, 2, 2, 4);
    InfLaw classical(0, 2, 4);
    for (const auto& w : all_words(2, 4)) classical.set_moment(w, CkScalar{law.moment(w)[0]});
    const auto c = moments_to_cumulants(law);
    const auto c0 = moments_to_cumulants(classical);
    for (const auto& w : all_words(2, 4)) CHECK(c.cumulant(w)[0] == c0.cumulant(w)[0]);
}

TEST_CASE("componentwise moment and cumulant formulas agree with the C_k path") {
    std::mt19937 rng(20);
    for (int k = 0; k <= 2; ++k) {
        const auto c = fixture::random_cumulants(rng, k, 2, 5);
        const auto law = cumulants_to_moments(c);
        for (const auto& w : all_words(2, 5)) {
            for (int i = 0; i <= k; ++i) {
                CHECK(moment_component_from_cumulants(c, w, i) == law.moment(w)[i]);
                CHECK(cumulant_component_from_moments(law, w, i) == c.cumulant(w)[i]);
            }
        }
    }
    const CumulantTable c(1, 1, 2);
    CHECK_THROWS_AS(moment_component_from_cumulants(c, Word{1}, 2), Error);
}

TEST_CASE("moment formula over star partitions agrees with the C_k path") {
    std::mt19937 rng(21);
    const auto c = fixture::random_cumulants(rng, 2, 2, 4);
    const auto law = cumulants_to_moments(c);
    for (const auto& w : all_words(2, 4))
        for (int i = 0; i <= 2; ++i) CHECK(moment_component_from_star(c, w, i) == law.moment(w)[i]);
}

TEST_CASE("product cumulants over type-k partitions agree with the C_k partition formula") {
    std::mt19937 rng(22);
    const auto c = fixture::random_cumulants(rng, 2, 4, 4);
    // a-variables 1, 2 and b-variables 3, 4 with mixed cumulants irrelevant: the formula only reads pure words.
    for (const auto& u : all_words(2, 4)) {
        Word a_word;
        Word b_word;
        for (int x : u) {
            a_word.push_back(x);
            b_word.push_back(x + 2);
        }
        CkScalar expected(2);
        for (const auto& p : enumerate_nc(static_cast<int>(u.size())))
            expected += ck_mul(kappa_pi(c, p, a_word), kappa_pi(c, kreweras(p), b_word));
        for (int i = 0; i <= 2; ++i) CHECK(product_cumulant_component_from_type_k(c, a_word, b_word, i) == expected[i]);
    }
}
