#pragma once

#include <cstdint>
#include <optional>

#include "domchrom/coloring.hpp"
#include "domchrom/tree.hpp"

namespace domchrom {

enum class VertexOrder {
    DegreeDescending, // decreasing tree degree, ties by id
    Natural,          // 0..n-1
    Bfs,              // breadth-first from the first DegreeDescending vertex
};

struct SolveOptions {
    std::optional<std::uint64_t> node_budget; // unset = complete search
    VertexOrder vertex_order = VertexOrder::DegreeDescending;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes_proper = 0;
    std::uint64_t prunes_domination = 0;
    std::uint64_t prunes_singleton = 0; // sole out-neighbor classes and color capacity
    int max_depth = 0;

    bool operator==(const SearchStats&) const = default;
};

struct SolveResult {
    int chi = 0;
    DominatorCertificate certificate;
    SearchStats stats;
    double elapsed_ms = 0.0; // wall time only, never part of reports
};

// Exact dominator chromatic number by ascending-k backtracking.
// Throws BudgetExhausted when options.node_budget is exceeded.
SolveResult solve_exact(const OrientedTree& t, const SolveOptions& options = {});

// Exhaustive oracle over every restricted-growth coloring. n <= 10, else
// TooLarge.
int brute_force_chi(const OrientedTree& t);

inline constexpr int kBruteForceMaxN = 10;

// Some valid dominator coloring, obtained by merging singleton classes while
// the result still verifies.
Coloring greedy_upper_bound(const OrientedTree& t);

// max(2, 1 + #vertices that are the sole out-neighbor of someone); 1 for n=1.
int trivial_lower_bound(const OrientedTree& t);

// Vertices w with N+(u) = {w} for some u. Such a w is alone in its class in
// every dominator coloring.
std::vector<bool> forced_singletons(const OrientedTree& t);

} // namespace domchrom
