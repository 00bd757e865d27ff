#include "doctest.h"

#include <set>

#include "domchrom/error.hpp"
#include "domchrom/generators.hpp"
#include "oracles.hpp"

using namespace domchrom;

TEST_CASE("gs, star and caterpillar shapes")
{
    const OrientedTree g = gs({8, 2, GsScheme::OutRootCenter, 0});
    CHECK(g.size() == 17);
    CHECK(g.arcs().size() == 16);
    CHECK(degree_profile(g).sinks.size() == 8);
    CHECK(classify_rooted(g).out_root == 0);
    CHECK(classify_rooted(gs({8, 2, GsScheme::InRootCenter, 0})).in_root == 0);

    CHECK(gs({3, 1, GsScheme::OutRootCenter, 0}) == star(3, 0));

    const OrientedTree c = caterpillar({3, {{1, 1}}, 0, 0});
    CHECK(c.size() == 4);
    CHECK(c == OrientedTree::build(4, {{0, 1}, {1, 2}, {1, 3}}));

    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= 4; ++k)
            CHECK(gs({m, k, GsScheme::Layered, 0}).size() == m * k + 1);

    CHECK_THROWS_AS(caterpillar({3, {{0, 1}}, 0, 0}), Error);
    CHECK_THROWS_AS(caterpillar({3, {{2, 1}}, 0, 0}), Error);
    CHECK_THROWS_AS(gs({0, 2, GsScheme::OutRootCenter, 0}), Error);
}

TEST_CASE("layered scheme points odd layers into even ones")
{
    const OrientedTree g = gs({2, 4, GsScheme::Layered, 0});
    // Path 0: vertices 1..4 at layers 1..4.
    CHECK(g.has_arc(1, 0));
    CHECK(g.has_arc(1, 2));
    CHECK(g.has_arc(3, 2));
    CHECK(g.has_arc(3, 4));
}

TEST_CASE("orientations")
{
    CHECK(orientations(path(4)).count() == 8);
    CHECK(orientations(OrientedTree::build(1, {})).count() == 1);

    int uniform = 0;
    for (const OrientedTree& t : orientations(star(3, 0))) {
        const RootClassification rc = classify_rooted(t);
        if ((rc.out_root && *rc.out_root == 0) || (rc.in_root && *rc.in_root == 0))
            ++uniform;
    }
    CHECK(uniform == 2);

    CHECK_THROWS_AS(orientations(path(27)), Error);
    CHECK_THROWS_AS(orient(path(3), 0b100), Error);
}

TEST_CASE("property: orientations are distinct and complements are reversals")
{
    for (int n = 1; n <= 8; ++n) {
        for (const OrientedTree& base : free_trees(n)) {
            const Orientations all = orientations(base);
            std::set<std::string> seen;
            const std::uint64_t full = all.count() - 1;
            for (auto it = all.begin(); it != all.end(); ++it) {
                const OrientedTree t = *it;
                CHECK(seen.insert(encode(t)).second);
                CHECK(reverse(t) == orient(base, ~it.mask() & full));
            }
            CHECK(seen.size() == all.count());
        }
    }
}

TEST_CASE("free_trees counts match the Pruefer oracle")
{
    // Pruefer enumeration is n^(n-2) sequences; n = 9 is the largest that
    // stays quick.
    for (int n = 1; n <= 9; ++n)
        CHECK(free_trees(n).size() == oracle::free_tree_count_by_pruefer(n));
    CHECK(free_trees(4).size() == 2);
    CHECK(free_trees(5).size() == 3);
    CHECK(free_trees(9).size() == 47);
}

TEST_CASE("free_trees counts match Otter's formula")
{
    const auto otter = oracle::free_tree_counts_otter(kMaxFreeTreeN);
    for (int n = 1; n <= kMaxFreeTreeN; ++n)
        CHECK(free_trees(n).size() == otter[n]);
    CHECK(otter[10] == 106);
    CHECK_THROWS_AS(free_trees(13), Error);
}

TEST_CASE("free_trees are pairwise non-isomorphic under an independent canonical form")
{
    for (int n = 1; n <= 10; ++n) {
        std::set<std::string> codes;
        for (const OrientedTree& t : free_trees(n)) {
            oracle::Edges edges;
            for (const Arc& a : t.arcs())
                edges.push_back({a.tail, a.head});
            CHECK(codes.insert(oracle::centroid_code(n, edges)).second);
        }
    }
}

TEST_CASE("random_tree")
{
    CHECK(random_tree(1, 3).size() == 1);
    CHECK(random_tree(2, 99) == path(2));
    CHECK(random_tree(8, 42) == random_tree(8, 42));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const OrientedTree t = random_tree(12, seed);
        CHECK(t.size() == 12);
        CHECK(t.arcs().size() == 11);
    }
}

TEST_CASE("from_pruefer agrees with the oracle decoder")
{
    const std::vector<int> seq{3, 3, 3, 4};
    const OrientedTree t = from_pruefer(6, seq);
    std::set<std::pair<int, int>> a, b;
    for (const Arc& x : t.arcs())
        a.insert(std::minmax(x.tail, x.head));
    for (auto [x, y] : oracle::decode_pruefer(6, seq))
        b.insert(std::minmax(x, y));
    CHECK(a == b);
}
