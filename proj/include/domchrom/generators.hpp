#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "domchrom/tree.hpp"

namespace domchrom {

// Directed path 0 -> 1 -> ... -> n-1.
OrientedTree path(int n);

enum class GsScheme {
    OutRootCenter, // every arc away from the center
    InRootCenter,  // every arc toward the center
    Layered,       // every arc from an odd layer into its even neighbor
    Mask,          // explicit per-edge mask over the out-root-center arcs
};

// Generalized star: m paths of k edges sharing the center vertex 0. Path j
// (0-based) holds vertices 1 + j*k + (layer-1) for layers 1..k.
struct GsSpec {
    int m = 1;
    int k = 1;
    GsScheme scheme = GsScheme::OutRootCenter;
    std::uint64_t mask = 0;
};

OrientedTree gs(const GsSpec& spec);

// Star with m leaves; bit i of `mask` set means leaf i+1 points at the center.
OrientedTree star(int m, std::uint64_t mask);

// Spine 0..spine_len-1; legs are numbered after the spine in the order given.
// spine_mask bit i set: spine arc i points from i+1 to i.
// leg_mask bit j set: leg j points into the spine.
struct CaterpillarSpec {
    int spine_len = 1;
    std::vector<std::pair<int, int>> legs; // (spine index, leg count)
    std::uint64_t spine_mask = 0;
    std::uint64_t leg_mask = 0;
};

OrientedTree caterpillar(const CaterpillarSpec& spec);

inline constexpr int kMaxOrientationN = 26;

// Flips arcs()[i] of `base` for every set bit i.
OrientedTree orient(const OrientedTree& base, std::uint64_t mask);

// Ascending-mask stream over all 2^(n-1) orientations of `base`.
class Orientations {
  public:
    explicit Orientations(OrientedTree base);

    std::uint64_t count() const noexcept { return count_; }

    class iterator {
      public:
        using iterator_category = std::input_iterator_tag;
        using value_type = OrientedTree;
        using difference_type = std::ptrdiff_t;

        iterator(const Orientations* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}
        OrientedTree operator*() const { return orient(owner_->base_, mask_); }
        std::uint64_t mask() const noexcept { return mask_; }
        iterator& operator++()
        {
            ++mask_;
            return *this;
        }
        bool operator==(const iterator& other) const { return mask_ == other.mask_; }

      private:
        const Orientations* owner_;
        std::uint64_t mask_;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, count_}; }

  private:
    OrientedTree base_;
    std::uint64_t count_;
};

// Throws TooLarge above kMaxOrientationN.
Orientations orientations(const OrientedTree& base);

// Canonical string of the underlying free tree (center-rooted AHU encoding).
std::string canonical_form(const OrientedTree& t);

inline constexpr int kMaxFreeTreeN = 12;

// One representative per isomorphism class, in canonical-string order; arcs
// point away from a center. 1 <= n <= 12, else TooLarge.
std::vector<OrientedTree> free_trees(int n);

// Uniform labeled tree from a seeded Pruefer sequence, arcs oriented from the
// lower to the higher id.
OrientedTree random_tree(int n, std::uint64_t seed);

// Decodes a Pruefer sequence over 0..n-1 (length n-2) into a base tree.
OrientedTree from_pruefer(int n, const std::vector<int>& seq);

} // namespace domchrom
