#include "doctest.h"

#include <functional>
#include <random>

#include "domchrom/error.hpp"
#include "domchrom/generators.hpp"
#include "domchrom/tree.hpp"

using namespace domchrom;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected domchrom::Error");
    return ErrorKind::ParseError;
}

// Random oriented trees for the property checks below.
std::vector<OrientedTree> sample_trees(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<OrientedTree> out;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng() % 14);
        const OrientedTree base = random_tree(n, rng());
        const std::uint64_t mask = n > 1 ? rng() & ((std::uint64_t{1} << (n - 1)) - 1) : 0;
        out.push_back(orient(base, mask));
    }
    return out;
}

} // namespace

TEST_CASE("build_tree accepts valid trees")
{
    const OrientedTree single = OrientedTree::build(1, {});
    CHECK(single.size() == 1);
    CHECK(single.arcs().empty());

    const OrientedTree t = OrientedTree::build(3, {{0, 1}, {2, 1}});
    const DegreeProfile p = degree_profile(t);
    CHECK(p.sources == std::vector<Vertex>{0, 2});
    CHECK(p.sinks == std::vector<Vertex>{1});
    CHECK(p.underlying_leaves == std::vector<Vertex>{0, 2});
}

TEST_CASE("build_tree stores arcs canonically")
{
    const OrientedTree a = OrientedTree::build(4, {{2, 1}, {0, 1}, {1, 3}});
    const OrientedTree b = OrientedTree::build(4, {{1, 3}, {0, 1}, {2, 1}});
    CHECK(a == b);
    CHECK(encode(a) == "4:0>1,1>3,2>1");
}

TEST_CASE("build_tree rejects invalid input")
{
    CHECK(kind_of([] { OrientedTree::build(3, {{0, 1}, {1, 2}, {2, 0}}); }) == ErrorKind::NotATree);
    CHECK(kind_of([] { OrientedTree::build(3, {{0, 1}}); }) == ErrorKind::NotATree);
    CHECK(kind_of([] { OrientedTree::build(0, {}); }) == ErrorKind::NotATree);
    CHECK(kind_of([] { OrientedTree::build(2, {{1, 1}}); }) == ErrorKind::SelfArc);
    CHECK(kind_of([] { OrientedTree::build(3, {{0, 1}, {1, 0}}); }) ==
          ErrorKind::DuplicateOrAntiparallelArc);
    CHECK(kind_of([] { OrientedTree::build(3, {{0, 1}, {0, 1}}); }) ==
          ErrorKind::DuplicateOrAntiparallelArc);
    CHECK(kind_of([] { OrientedTree::build(2, {{0, 5}}); }) == ErrorKind::BadVertexId);
    CHECK(kind_of([] { OrientedTree::build(2, {{-1, 0}}); }) == ErrorKind::BadVertexId);
}

TEST_CASE("reverse")
{
    CHECK(reverse(path(3)) == OrientedTree::build(3, {{2, 1}, {1, 0}}));
    CHECK(reverse(star(3, 0)) == star(3, 0b111));
}

TEST_CASE("classify_rooted")
{
    const RootClassification p = classify_rooted(path(4));
    CHECK(p.out_root == 0);
    CHECK(p.in_root == 3);

    const RootClassification in_star = classify_rooted(OrientedTree::build(3, {{0, 1}, {2, 1}}));
    CHECK(in_star.in_root == 1);
    CHECK_FALSE(in_star.out_root);

    const RootClassification neither =
        classify_rooted(OrientedTree::build(4, {{0, 1}, {2, 1}, {2, 3}}));
    CHECK_FALSE(neither.out_root);
    CHECK_FALSE(neither.in_root);

    const RootClassification one = classify_rooted(OrientedTree::build(1, {}));
    CHECK(one.out_root == 0);
    CHECK(one.in_root == 0);
}

TEST_CASE("directed_leaf_count")
{
    CHECK(directed_leaf_count(path(6), RootMode::OutTree) == 1);
    CHECK(directed_leaf_count(path(6), RootMode::InTree) == 1);
    CHECK(directed_leaf_count(star(5, 0), RootMode::OutTree) == 5);
    CHECK(directed_leaf_count(gs({8, 2, GsScheme::OutRootCenter, 0}), RootMode::OutTree) == 8);
    CHECK(directed_leaf_count(gs({8, 2, GsScheme::InRootCenter, 0}), RootMode::InTree) == 8);
    CHECK(kind_of([] { directed_leaf_count(star(5, 0), RootMode::InTree); }) ==
          ErrorKind::NotRooted);
    // Underlying leaves and directed leaves differ on a directed path.
    CHECK(degree_profile(path(6)).underlying_leaves.size() == 2);
}

TEST_CASE("delete_leaf")
{
    const LeafDeletion d = delete_leaf(path(2), 1);
    CHECK(d.tree == OrientedTree::build(1, {}));
    CHECK(d.relabel == std::vector<Vertex>{0, -1});

    const LeafDeletion s = delete_leaf(star(3, 0), 3);
    CHECK(s.tree == star(2, 0));

    const LeafDeletion mid = delete_leaf(star(3, 0), 1);
    CHECK(mid.tree == star(2, 0));
    CHECK(mid.relabel == std::vector<Vertex>{0, -1, 1, 2});

    CHECK(kind_of([] { delete_leaf(star(3, 0), 0); }) == ErrorKind::NotALeaf);
}

TEST_CASE("property: degree sums, leaves and reversal")
{
    for (const OrientedTree& t : sample_trees(300, 11)) {
        const int n = t.size();
        const DegreeProfile p = degree_profile(t);
        int out_sum = 0, in_sum = 0;
        for (Vertex v = 0; v < n; ++v) {
            out_sum += p.out_degree[v];
            in_sum += p.in_degree[v];
        }
        CHECK(out_sum == n - 1);
        CHECK(in_sum == n - 1);
        if (n >= 2)
            CHECK(p.underlying_leaves.size() >= 2);

        const OrientedTree r = reverse(t);
        CHECK(reverse(r) == t);
        const DegreeProfile rp = degree_profile(r);
        CHECK(rp.sources == p.sinks);
        CHECK(rp.sinks == p.sources);
        const RootClassification a = classify_rooted(t);
        const RootClassification b = classify_rooted(r);
        CHECK(a.out_root == b.in_root);
        CHECK(a.in_root == b.out_root);

        CHECK(decode(encode(t)) == t);
    }
}

TEST_CASE("property: deleting then re-attaching a leaf restores the tree")
{
    for (const OrientedTree& t : sample_trees(200, 12)) {
        for (Vertex v : degree_profile(t).underlying_leaves) {
            const LeafDeletion d = delete_leaf(t, v);
            CHECK(d.tree.size() == t.size() - 1);
            // Undo the compaction and put the leaf back with its direction.
            std::vector<Vertex> back(d.tree.size());
            for (Vertex x = 0; x < t.size(); ++x)
                if (d.relabel[x] >= 0)
                    back[d.relabel[x]] = x;
            std::vector<Arc> arcs;
            for (const Arc& a : d.tree.arcs())
                arcs.push_back({back[a.tail], back[a.head]});
            const Vertex u = t.neighbors(v).front();
            arcs.push_back(t.has_arc(u, v) ? Arc{u, v} : Arc{v, u});
            CHECK(OrientedTree::build(t.size(), arcs) == t);
        }
    }
}
