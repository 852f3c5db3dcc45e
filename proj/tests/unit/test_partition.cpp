#include "eqrel/enumeration.hpp"
#include "eqrel/oracle_set.hpp"
#include "eqrel/pairing.hpp"
#include "eqrel/partition.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace eqrel;

TEST_CASE("union-find keeps the least element at the root")
{
    UnionFind uf(8);
    CHECK(uf.unite(5, 3));
    CHECK(uf.unite(7, 5));
    CHECK_FALSE(uf.unite(3, 7));
    CHECK(uf.find(7) == 3);
    CHECK(uf.unite(6, 1));
    CHECK(uf.unite(7, 6));
    CHECK(uf.find(5) == 1);
    CHECK(uf.find(0) == 0);
}

TEST_CASE("partition from union-find")
{
    UnionFind uf(6);
    uf.unite(4, 1);
    uf.unite(5, 4);
    const auto p = Partition::from_union_find(uf);
    CHECK(p.size() == 6);
    CHECK(p.class_count() == 4);
    CHECK(p.representatives() == std::vector<Nat>{0, 1, 2, 3});
    CHECK(p.members(5) == std::vector<Nat>{1, 4, 5});
    CHECK(p.class_size(4) == 3);
    CHECK(p.class_index(5) == 1);
    CHECK(p.same_class(1, 5));
    CHECK_FALSE(p.same_class(0, 5));
}

TEST_CASE("representative arrays must be least-element labellings")
{
    CHECK_NOTHROW(Partition::from_representatives({0, 1, 0, 1}));
    CHECK_THROWS_AS(Partition::from_representatives({0, 2, 2}), InvalidArgument);
    CHECK_THROWS_AS(Partition::from_representatives({0, 0, 1}), InvalidArgument);
}

TEST_CASE("prefix keeps representatives and refines detects coarsening")
{
    const auto p = Partition::from_representatives({0, 1, 0, 3, 1, 3});
    const auto q = p.prefix(3);
    CHECK(q.representatives() == std::vector<Nat>{0, 1, 3});
    CHECK_THROWS_AS(p.prefix(6), WindowError);

    const auto coarse = Partition::from_representatives({0, 1, 0, 1, 1, 1});
    CHECK(p.refines(coarse));
    CHECK_FALSE(coarse.refines(p));
    CHECK(p.refines(p));
}

TEST_CASE("cantor pairing is a bijection on a grid")
{
    CHECK(cantor_pair(0, 0) == 0);
    CHECK(cantor_pair(1, 0) == 1);
    CHECK(cantor_pair(0, 1) == 2);
    CHECK(cantor_pair(2, 0) == 3);
    for (Nat x = 0; x < 200; ++x)
        for (Nat y = 0; y < 200; ++y)
            REQUIRE(cantor_unpair(cantor_pair(x, y)) == NatPair{x, y});
    for (Nat z = 0; z < 5000; ++z) {
        const auto [x, y] = cantor_unpair(z);
        REQUIRE(cantor_pair(x, y) == z);
    }
    const Nat big = (Nat{1} << 31);
    CHECK(cantor_unpair(cantor_pair(big, big - 7)) == NatPair{big, big - 7});
}

TEST_CASE("enumeration validates stage marks")
{
    CHECK_THROWS_AS(Enumeration({{0, 1}, {2, 3}}, {2, 1}), InvalidArgument);
    CHECK_THROWS_AS(Enumeration({{0, 1}, {2, 3}}, {1}), InvalidArgument);
    CHECK_THROWS_AS(Enumeration({{0, 1}}, {}), InvalidArgument);
    CHECK_NOTHROW(Enumeration({{0, 1}, {2, 3}}, {0, 2, 2}));

    const auto e = Enumeration::from_stages({{{0, 5}}, {}, {{1, 6}, {2, 7}}});
    CHECK(e.stage_marks() == std::vector<std::size_t>{1, 1, 3});
    CHECK(e.stages().size() == 3);
    CHECK(e.stages()[2] == std::vector<NatPair>{{1, 6}, {2, 7}});
    CHECK(e.support_size() == 8);
}

TEST_CASE("first-occurrence order keys")
{
    const auto e = Enumeration::from_stages({{{4, 2}}, {{2, 9}, {9, 4}}});
    CHECK(e.order_key(4) == 0);
    CHECK(e.order_key(2) == 1);
    CHECK(e.order_key(9) == 3);
    // never enumerated: after all pairs, by value
    CHECK(e.order_key(0) == 6);
    CHECK(e.order_key(3) == 9);
    CHECK(e.order_key(4) < e.order_key(2));
}

TEST_CASE("replaying more stages only coarsens the partition")
{
    gen::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto e = gen::enumeration(rng, 30, gen::uniform(rng, 0, 20), gen::uniform(rng, 1, 6));
        Partition prev = e.replay(0);
        CHECK(prev.class_count() == e.support_size());
        for (std::size_t s = 1; s <= e.stage_count(); ++s) {
            const Partition next = e.replay(s);
            REQUIRE(prev.refines(next));
            prev = next;
        }
        CHECK(prev == e.replay());
    }
}

TEST_CASE("oracle sets")
{
    const OracleSet explicit_set({0, 2, 5});
    CHECK(explicit_set.contains(2));
    CHECK_FALSE(explicit_set.contains(3));
    CHECK(explicit_set.finite());

    const auto residues = OracleSet::residues(4, {1, 3});
    CHECK(residues.contains(9));
    CHECK_FALSE(residues.contains(8));
    CHECK_FALSE(residues.finite());
    CHECK(residues.members_below(8) == std::vector<Nat>{1, 3, 5, 7});

    const OracleSet both({8}, ResidueRule{3, {0}});
    CHECK(both.members_below(10) == std::vector<Nat>{0, 3, 6, 8, 9});

    CHECK_THROWS_AS(OracleSet::residues(0, {}), InvalidArgument);
    CHECK_THROWS_AS(OracleSet::residues(3, {3}), InvalidArgument);
}
