#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace domchrom {

using Vertex = int;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    auto operator<=>(const Arc&) const = default;
};

// An orientation of a finite tree on vertices 0..n-1.
//
// Values are immutable once built. The arc list is kept sorted, so two trees
// built from the same arc set compare equal regardless of input order.
class OrientedTree {
  public:
    // Throws Error with NotATree, SelfArc, DuplicateOrAntiparallelArc or
    // BadVertexId.
    static OrientedTree build(int n, std::span<const Arc> arcs);
    static OrientedTree build(int n, std::initializer_list<Arc> arcs)
    {
        return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
    }

    int size() const noexcept { return n_; }
    std::span<const Arc> arcs() const noexcept { return arcs_; }

    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }
    int degree(Vertex v) const { return out_degree(v) + in_degree(v); }

    bool has_arc(Vertex tail, Vertex head) const;
    bool adjacent(Vertex a, Vertex b) const { return has_arc(a, b) || has_arc(b, a); }

    // Underlying (undirected) neighbors, ascending.
    std::vector<Vertex> neighbors(Vertex v) const;

    bool operator==(const OrientedTree& other) const
    {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

  private:
    OrientedTree() = default;

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

struct DegreeProfile {
    std::vector<int> out_degree;
    std::vector<int> in_degree;
    std::vector<Vertex> sources;
    std::vector<Vertex> sinks;
    // Tree-degree-1 vertices. Not to be confused with directed leaves.
    std::vector<Vertex> underlying_leaves;
};

DegreeProfile degree_profile(const OrientedTree& t);

struct RootClassification {
    std::optional<Vertex> out_root; // arborescence root
    std::optional<Vertex> in_root;  // anti-arborescence root
};

enum class RootMode { OutTree, InTree };

OrientedTree reverse(const OrientedTree& t);

RootClassification classify_rooted(const OrientedTree& t);

// Sinks of an out-tree or sources of an in-tree. Throws NotRooted when the
// tree is not of the requested mode.
int directed_leaf_count(const OrientedTree& t, RootMode mode);

struct LeafDeletion {
    OrientedTree tree;
    // old vertex id -> new id, -1 for the deleted vertex
    std::vector<Vertex> relabel;
};

// Removes an underlying leaf and compacts the remaining ids in order.
// Throws NotALeaf.
LeafDeletion delete_leaf(const OrientedTree& t, Vertex v);

// Sub-tree induced by `keep` (must induce a connected subgraph), relabeled in
// the order given.
OrientedTree induced_subtree(const OrientedTree& t, std::span<const Vertex> keep);

// Compact single-line instance encoding, e.g. "4:0>1,2>1,1>3".
std::string encode(const OrientedTree& t);
OrientedTree decode(const std::string& text);

} // namespace domchrom
