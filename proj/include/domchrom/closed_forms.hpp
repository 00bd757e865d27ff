#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domchrom/coloring.hpp"
#include "domchrom/generators.hpp"
#include "domchrom/tree.hpp"

namespace domchrom {

// Directed path on n vertices: every vertex needs its own color.
int chi_directed_path(int n);

// Minimum over all orientations of P_n. For n >= 4 this is the piecewise
// formula in n mod 4 (with P_6 -> 3); n <= 3 uses a table computed by
// exhaustive search.
int chi_path_orientation_min(int n);

// True where chi_path_orientation_min comes from the small-n table rather
// than the formula.
bool path_orientation_min_is_extension(int n);

// n - l + 1 with l the directed-leaf count. Throws NotRooted.
int chi_rooted(const OrientedTree& t);

struct StarValue {
    int chi = 0;
    OrientedTree tree;
    DominatorCertificate certificate;
};

// Oriented star with m leaves (mask convention of star()): 2 when all arcs
// agree in direction relative to the center, 3 otherwise.
StarValue chi_star(std::uint64_t mask, int m);

// Single-source or single-sink generalized star: m(k-1) + 2.
int gs_uniform_chi(int m, int k);

// 3 + m(floor(k/2) - 1). Throws KTooSmall for k < 2.
int gs_layered_bound(int m, int k);

struct LayeredGs {
    OrientedTree tree;
    Coloring coloring;
    std::optional<DominatorCertificate> certificate; // set iff the coloring verifies
    std::vector<Violation> violations;
    int colors = 0;
};

// Layered generalized star with arcs from odd layers into even ones: odd
// layers share one color, the center and layer 2 get one color each, and each
// vertex of layers 4, 6, ... is colored uniquely. Throws KTooSmall.
LayeredGs build_layered_gs(int m, int k);

struct CaterpillarView {
    std::vector<Vertex> spine; // a longest path, from its smaller endpoint
    struct Leg {
        Vertex vertex;
        bool into_spine; // arc leg -> spine
    };
    // Indexed by spine position.
    std::vector<std::vector<Leg>> legs;
};

// Deterministic longest path (smallest endpoint, then lexicographically
// smallest sequence) with every other vertex attached as a leg. Throws
// NotACaterpillar.
CaterpillarView central_path(const OrientedTree& t);

// The spine as an oriented path of its own, ids 0..m-1 in spine order.
OrientedTree spine_subtree(const OrientedTree& t, const CaterpillarView& view);

// Spine colored 1..m, source legs share one new color, remaining legs share a
// color per spine in-neighbor. Uses at most 2m - 1 colors.
DominatorCertificate caterpillar_upper_coloring(const OrientedTree& t);

// For a directed spine: spine colored 1..m, every leg takes the color of the
// spine's source end. Exactly m colors. Throws SpineNotDirected.
DominatorCertificate directed_spine_coloring(const OrientedTree& t);

bool spine_is_directed(const OrientedTree& t, const CaterpillarView& view);

} // namespace domchrom
