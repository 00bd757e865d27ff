#include "doctest.h"

#include <algorithm>
#include <random>

#include "domchrom/error.hpp"
#include "domchrom/generators.hpp"
#include "domchrom/solver.hpp"

using namespace domchrom;

namespace {

int min_over_orientations_brute(const OrientedTree& base)
{
    int best = base.size();
    for (const OrientedTree& t : orientations(base))
        best = std::min(best, brute_force_chi(t));
    return best;
}

} // namespace

TEST_CASE("solve_exact on known values")
{
    CHECK(solve_exact(path(5)).chi == 5);
    CHECK(solve_exact(OrientedTree::build(1, {})).chi == 1);
    CHECK(solve_exact(star(4, 0)).chi == 2);
    CHECK(solve_exact(star(4, 0b1111)).chi == 2);

    int best = 100;
    for (const OrientedTree& t : orientations(path(6)))
        best = std::min(best, solve_exact(t).chi);
    CHECK(best == 3);
}

TEST_CASE("brute_force_chi")
{
    CHECK(brute_force_chi(path(4)) == 4);
    CHECK(min_over_orientations_brute(path(4)) == 3);
    CHECK(min_over_orientations_brute(path(3)) == 2);
    CHECK(brute_force_chi(OrientedTree::build(1, {})) == 1);
    CHECK_THROWS_AS(brute_force_chi(path(11)), Error);
}

TEST_CASE("greedy_upper_bound and trivial_lower_bound")
{
    CHECK(verify_dominator(path(6), greedy_upper_bound(path(6))).ok());
    CHECK(greedy_upper_bound(star(6, 0)).num_colors() <= 3);
    CHECK(greedy_upper_bound(path(3)).num_colors() == 3);

    CHECK(trivial_lower_bound(OrientedTree::build(1, {})) == 1);
    for (int n = 2; n <= 9; ++n)
        CHECK(trivial_lower_bound(path(n)) == n);
    CHECK(trivial_lower_bound(star(5, 0)) == 2);
}

TEST_CASE("node budget")
{
    // Take the first random instance that needs a real search, then give it
    // one node less than it used.
    std::optional<OrientedTree> hard;
    SolveResult full;
    for (std::uint64_t seed = 0; !hard; ++seed) {
        const OrientedTree t = orient(random_tree(10, seed), seed * 2654435761U & 0x1ff);
        full = solve_exact(t);
        if (full.stats.nodes >= 5)
            hard = t;
    }
    SolveOptions opts;
    opts.node_budget = full.stats.nodes - 1;
    try {
        solve_exact(*hard, opts);
        FAIL("expected BudgetExhausted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExhausted);
    }
    opts.node_budget = full.stats.nodes;
    CHECK(solve_exact(*hard, opts).chi == full.chi);
}

TEST_CASE("property: solver agrees with brute force and bounds on random trees")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 250; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const OrientedTree t = orient(random_tree(n, rng()),
                                      n > 1 ? rng() & ((std::uint64_t{1} << (n - 1)) - 1) : 0);
        const SolveResult r = solve_exact(t);
        CHECK(r.chi == brute_force_chi(t));
        CHECK(check_certificate(t, r.certificate));
        CHECK(r.certificate.coloring.num_colors() == r.chi);
        const int upper = greedy_upper_bound(t).num_colors();
        CHECK(trivial_lower_bound(t) <= r.chi);
        CHECK(r.chi <= upper);
        CHECK(upper <= n);

        for (VertexOrder order : {VertexOrder::Natural, VertexOrder::Bfs})
            CHECK(solve_exact(t, {std::nullopt, order}).chi == r.chi);

        const SolveResult again = solve_exact(t);
        CHECK(again.certificate == r.certificate);
        CHECK(again.stats == r.stats);

        for (Vertex v : degree_profile(t).underlying_leaves) {
            const int delta = r.chi - solve_exact(delete_leaf(t, v).tree).chi;
            CHECK((delta == 0 || delta == 1));
        }
    }
}

TEST_CASE("forced singletons")
{
    const auto f = forced_singletons(path(4));
    CHECK(f == std::vector<bool>{false, true, true, true});
    const auto s = forced_singletons(star(3, 0));
    CHECK(std::count(s.begin(), s.end(), true) == 0);
}
