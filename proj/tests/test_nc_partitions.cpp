#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ifree/errors.hpp"
#include "ifree/nc_partitions.hpp"
#include "oracles.hpp"

#include <set>

using namespace ifree;

TEST_CASE("is_noncrossing examples") {
    CHECK_FALSE(is_noncrossing(SetPartition(4, {{1, 3}, {2, 4}})));
    CHECK(is_noncrossing(SetPartition(4, {{1, 4}, {2, 3}})));
    CHECK(is_noncrossing(SetPartition(6, {{1, 2, 3}, {4, 5, 6}})));
    CHECK_THROWS_AS(NcPartition(4, {{1, 3}, {2, 4}}), Error);
}

TEST_CASE("set partition validation and canonical form") {
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), Error);
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), Error);
    CHECK(SetPartition(3, {{3, 2}, {1}}) == SetPartition(3, {{1}, {2, 3}}));
}

TEST_CASE("is_noncrossing agrees with the quadruple definition") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : oracle::all_set_partitions(n)) CHECK(is_noncrossing(p) == !oracle::has_crossing(p));
}

TEST_CASE("enumerate_nc matches the brute-force filter") {
    CHECK(enumerate_nc(1).size() == 1);
    CHECK(enumerate_nc(3).size() == 5);
    CHECK(enumerate_nc(4).size() == 14);
    for (int n = 1; n <= 8; ++n) {
        const auto& listed = enumerate_nc(n);
        const std::set<SetPartition> unique(listed.begin(), listed.end());
        const auto filtered = oracle::nc_by_filter(n);
        CHECK(unique.size() == listed.size());
        CHECK(unique == std::set<SetPartition>(filtered.begin(), filtered.end()));
        CHECK(Rational(static_cast<long>(listed.size())) == Rational(catalan(n)));
    }
    CHECK_THROWS_AS(enumerate_nc(0), Error);
}

TEST_CASE("kreweras examples") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(kreweras(NcPartition::singletons(n)) == NcPartition::full(n));
        CHECK(kreweras(NcPartition::full(n)) == NcPartition::singletons(n));
    }
    const NcPartition pi(6, {{1, 2, 3}, {4, 5, 6}});
    CHECK(kreweras(pi) == NcPartition(6, {{1}, {2}, {4}, {5}, {3, 6}}));
}

TEST_CASE("kreweras matches the largest-complement definition") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_nc(n)) CHECK(kreweras(p) == oracle::kreweras_by_definition(p));
}

TEST_CASE("kreweras structural identities") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : enumerate_nc(n)) {
            const auto kr = kreweras(p);
            CHECK(p.num_blocks() + kr.num_blocks() == n + 1);
            CHECK(kreweras(kr, KrewerasDirection::inverse) == p);
            CHECK(kreweras(kreweras(p, KrewerasDirection::inverse)) == p);
            CHECK(kreweras(kr) == rotate_back(p));
        }
    }
}

TEST_CASE("kreweras is order reversing") {
    for (int n = 1; n <= 6; ++n) {
        const auto& all = enumerate_nc(n);
        for (const auto& p : all)
            for (const auto& q : all)
                if (refines(p, q)) CHECK(refines(kreweras(q), kreweras(p)));
    }
}

TEST_CASE("biane permutation") {
    CHECK(biane_permutation(NcPartition::full(3)) == Permutation{2, 3, 1});
    CHECK(biane_permutation(NcPartition::singletons(3)) == Permutation{1, 2, 3});
    CHECK(biane_permutation(NcPartition(3, {{1, 3}, {2}})) == Permutation{3, 2, 1});
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_nc(n)) {
            const auto perm = biane_permutation(p);
            CHECK(cycle_partition(perm) == p);
            CHECK(cycle_partition(perm).num_blocks() == p.num_blocks());
        }
}

TEST_CASE("ordered blocks") {
    const auto ob = ordered_blocks(NcPartition::singletons(2));
    REQUIRE(ob.mix.size() == 3);
    CHECK(ob.mix[0] == OrderedBlock{{1}, false});
    CHECK(ob.mix[1] == OrderedBlock{{2}, false});
    CHECK(ob.mix[2] == OrderedBlock{{1, 2}, true});
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : enumerate_nc(n)) {
            const auto blocks = ordered_blocks(p);
            CHECK(blocks.mix.size() == static_cast<std::size_t>(n + 1));
            CHECK(blocks.mix.front().elements.size() == 1);
            const auto& first = blocks.sep.front().elements;
            CHECK(first.back() - first.front() + 1 == static_cast<int>(first.size()));
            // Strict total order: irreflexive, transitive, total.
            for (const auto& v : blocks.mix) {
                CHECK_FALSE(block_precedes(v, v));
                for (const auto& w : blocks.mix) {
                    if (!(v == w)) CHECK(block_precedes(v, w) != block_precedes(w, v));
                    for (const auto& x : blocks.mix)
                        if (block_precedes(v, w) && block_precedes(w, x)) CHECK(block_precedes(v, x));
                }
            }
        }
    }
}

TEST_CASE("block order agrees with the nested-or-left definition") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& p : enumerate_nc(n)) {
            const auto blocks = ordered_blocks(p).mix;
            auto positions = [](const OrderedBlock& b) {
                std::vector<int> out;
                for (int x : b.elements) out.push_back(2 * x - (b.barred ? 0 : 1));
                return out;
            };
            for (const auto& v : blocks)
                for (const auto& w : blocks) {
                    if (v == w) continue;
                    const auto pv = positions(v);
                    const auto pw = positions(w);
                    const bool left = pv.back() < pw.front();
                    bool nested = false;
                    for (std::size_t i = 0; i + 1 < pw.size(); ++i)
                        if (pw[i] < pv.front() && pv.back() < pw[i + 1]) nested = true;
                    CHECK(block_precedes(v, w) == (left || nested));
                }
        }
    }
}

TEST_CASE("partition join") {
    const SetPartition p(4, {{1, 3}, {2}, {4}});
    CHECK(partition_join(p, SetPartition::singletons(4)) == p);
    CHECK(partition_join(p, SetPartition::full(4)) == SetPartition::full(4));
    CHECK(partition_join(p, SetPartition(4, {{1, 2}, {3, 4}})) == SetPartition::full(4));
    CHECK_THROWS_AS(partition_join(p, SetPartition::full(3)), Error);
}

TEST_CASE("mobius_to_top") {
    CHECK(mobius_to_top(NcPartition::full(4)) == 1);
    CHECK(mobius_to_top(NcPartition::singletons(3)) == 2);
    CHECK(mobius_to_top(NcPartition::singletons(4)) == -5);
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_nc(n)) CHECK(mobius_to_top(p) == oracle::lattice_mobius_to_top(p));
}
