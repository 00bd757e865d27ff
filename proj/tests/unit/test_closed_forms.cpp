#include "doctest.h"

#include "domchrom/closed_forms.hpp"
#include "domchrom/error.hpp"
#include "domchrom/solver.hpp"

using namespace domchrom;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected domchrom::Error");
    return ErrorKind::ParseError;
}

int brute_min_over_path(int n)
{
    int best = n;
    for (const OrientedTree& t : orientations(path(n)))
        best = std::min(best, brute_force_chi(t));
    return best;
}

} // namespace

TEST_CASE("path values")
{
    CHECK(chi_directed_path(1) == 1);
    CHECK(chi_directed_path(5) == 5);
    CHECK(chi_directed_path(12) == 12);

    CHECK(chi_path_orientation_min(8) == 4);
    CHECK(chi_path_orientation_min(6) == 3);
    CHECK(chi_path_orientation_min(7) == 4);
    CHECK(chi_path_orientation_min(3) == 2);
    CHECK(path_orientation_min_is_extension(3));
    CHECK_FALSE(path_orientation_min_is_extension(4));
}

TEST_CASE("small path table matches brute force")
{
    for (int n = 1; n <= 3; ++n)
        CHECK(chi_path_orientation_min(n) == brute_min_over_path(n));
}

TEST_CASE("chi_rooted")
{
    CHECK(chi_rooted(path(5)) == 5);
    CHECK(chi_rooted(star(6, 0)) == 2);
    CHECK(chi_rooted(gs({8, 2, GsScheme::OutRootCenter, 0})) == 10);
    CHECK(chi_rooted(gs({8, 2, GsScheme::InRootCenter, 0})) == 10);
    const OrientedTree neither = OrientedTree::build(4, {{0, 1}, {2, 1}, {2, 3}});
    CHECK(kind_of([&] { chi_rooted(neither); }) == ErrorKind::NotRooted);
}

TEST_CASE("chi_star")
{
    CHECK(chi_star(0, 5).chi == 2);
    CHECK(chi_star(0b11111, 5).chi == 2);
    CHECK(chi_star(0b01, 2).chi == 3);
    for (int m = 1; m <= 6; ++m)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            const StarValue s = chi_star(mask, m);
            CHECK(check_certificate(s.tree, s.certificate));
            CHECK(s.certificate.coloring.num_colors() == s.chi);
            CHECK(solve_exact(s.tree).chi == s.chi);
        }
}

TEST_CASE("generalized star formulas")
{
    CHECK(gs_uniform_chi(8, 2) == 10);
    CHECK(gs_uniform_chi(5, 1) == 2);
    CHECK(gs_uniform_chi(3, 4) == 11);
    CHECK(gs_layered_bound(8, 2) == 3);
    CHECK(gs_layered_bound(3, 4) == 6);
    CHECK(gs_layered_bound(5, 7) == 13);
    CHECK(kind_of([] { gs_layered_bound(3, 1); }) == ErrorKind::KTooSmall);
}

TEST_CASE("build_layered_gs")
{
    const LayeredGs a = build_layered_gs(4, 2);
    REQUIRE(a.certificate);
    CHECK(a.colors == 3);

    const LayeredGs b = build_layered_gs(3, 4);
    REQUIRE(b.certificate);
    CHECK(b.colors == 6);

    const LayeredGs c = build_layered_gs(2, 2);
    REQUIRE(c.certificate);
    CHECK(c.colors == 3);
    CHECK(c.colors == chi_path_orientation_min(5));

    for (int m = 1; m <= 4; ++m)
        for (int k = 2; k <= 8; k += 2) {
            const LayeredGs g = build_layered_gs(m, k);
            REQUIRE(g.certificate);
            CHECK(check_certificate(g.tree, *g.certificate));
            CHECK(g.colors == gs_layered_bound(m, k));
        }

    // Odd k: the construction is reported as-is. At k = 3 the last odd layer
    // has only the shared layer-2 class to point at, which fails once m >= 2.
    const LayeredGs odd = build_layered_gs(3, 3);
    CHECK_FALSE(odd.certificate);
    CHECK_FALSE(odd.violations.empty());
    CHECK(build_layered_gs(3, 5).certificate);

    CHECK(kind_of([] { build_layered_gs(2, 1); }) == ErrorKind::KTooSmall);
}

TEST_CASE("central_path")
{
    const CaterpillarView p = central_path(path(5));
    CHECK(p.spine == std::vector<Vertex>{0, 1, 2, 3, 4});
    for (const auto& legs : p.legs)
        CHECK(legs.empty());

    const CaterpillarView s = central_path(star(3, 0));
    CHECK(s.spine == std::vector<Vertex>{1, 0, 2});
    REQUIRE(s.legs[1].size() == 1);
    CHECK(s.legs[1][0].vertex == 3);
    CHECK_FALSE(s.legs[1][0].into_spine);

    const OrientedTree c = OrientedTree::build(5, {{0, 1}, {1, 2}, {2, 3}, {4, 1}});
    const CaterpillarView v = central_path(c);
    CHECK(v.spine == std::vector<Vertex>{0, 1, 2, 3});
    REQUIRE(v.legs[1].size() == 1);
    CHECK(v.legs[1][0].into_spine);

    CHECK(kind_of([] { central_path(gs({3, 3, GsScheme::OutRootCenter, 0})); }) ==
          ErrorKind::NotACaterpillar);
    CHECK(central_path(OrientedTree::build(1, {})).spine == std::vector<Vertex>{0});
}

TEST_CASE("caterpillar_upper_coloring")
{
    const OrientedTree out_leg = OrientedTree::build(4, {{0, 1}, {1, 2}, {1, 3}});
    const DominatorCertificate a = caterpillar_upper_coloring(out_leg);
    CHECK(a.coloring.num_colors() == 4);
    CHECK(check_certificate(out_leg, a));

    const OrientedTree in_leg = OrientedTree::build(4, {{0, 1}, {1, 2}, {3, 1}});
    const DominatorCertificate b = caterpillar_upper_coloring(in_leg);
    CHECK(b.coloring.num_colors() == 4);
    CHECK(check_certificate(in_leg, b));

    CHECK(caterpillar_upper_coloring(path(4)).coloring.num_colors() == 4);
}

TEST_CASE("directed_spine_coloring")
{
    const OrientedTree t = OrientedTree::build(6, {{0, 1}, {1, 2}, {2, 3}, {4, 2}, {2, 5}});
    const DominatorCertificate a = directed_spine_coloring(t);
    CHECK(a.coloring.num_colors() == 4);
    CHECK(check_certificate(t, a));
    CHECK(solve_exact(t).chi == 4);

    CHECK(directed_spine_coloring(path(5)).coloring.num_colors() == 5);
    // Backwards spine is still directed.
    CHECK(directed_spine_coloring(reverse(path(5))).coloring.num_colors() == 5);

    CHECK(kind_of([] { directed_spine_coloring(OrientedTree::build(3, {{0, 1}, {2, 1}})); }) ==
          ErrorKind::SpineNotDirected);
}

TEST_CASE("property: caterpillar sandwich on generated caterpillars")
{
    for (int m = 3; m <= 6; ++m)
        for (std::uint64_t spine_mask = 0; spine_mask < (std::uint64_t{1} << (m - 1));
             spine_mask += 3)
            for (std::uint64_t leg_mask = 0; leg_mask < 4; ++leg_mask) {
                const OrientedTree t = caterpillar({m, {{1, 1}, {m - 2, 1}}, spine_mask, leg_mask});
                const CaterpillarView view = central_path(t);
                CHECK(static_cast<int>(view.spine.size()) == m);
                const int chi = solve_exact(t).chi;
                CHECK(solve_exact(spine_subtree(t, view)).chi <= chi);
                const int upper = caterpillar_upper_coloring(t).coloring.num_colors();
                CHECK(chi <= upper);
                CHECK(upper <= 2 * m - 1);
                if (spine_is_directed(t, view)) {
                    CHECK(chi == m);
                    CHECK(directed_spine_coloring(t).coloring.num_colors() == m);
                }
            }
}
