#include "domchrom/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "domchrom/error.hpp"

namespace domchrom {

OrientedTree path(int n)
{
    if (n < 1)
        throw Error(ErrorKind::SpecInvalid, "path needs n >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i)
        arcs.push_back({i, i + 1});
    return OrientedTree::build(n, arcs);
}

namespace {

Vertex gs_vertex(int m_index, int layer, int k) { return 1 + m_index * k + (layer - 1); }

} // namespace

OrientedTree gs(const GsSpec& spec)
{
    if (spec.m < 1 || spec.k < 1)
        throw Error(ErrorKind::SpecInvalid, "generalized star needs m >= 1 and k >= 1");
    const int n = spec.m * spec.k + 1;
    std::vector<Arc> arcs;
    for (int j = 0; j < spec.m; ++j) {
        for (int layer = 1; layer <= spec.k; ++layer) {
            const Vertex inner = layer == 1 ? 0 : gs_vertex(j, layer - 1, spec.k);
            const Vertex outer = gs_vertex(j, layer, spec.k);
            bool away = true;
            switch (spec.scheme) {
            case GsScheme::OutRootCenter:
            case GsScheme::Mask: away = true; break;
            case GsScheme::InRootCenter: away = false; break;
            case GsScheme::Layered: away = layer % 2 == 0; break;
            }
            arcs.push_back(away ? Arc{inner, outer} : Arc{outer, inner});
        }
    }
    OrientedTree t = OrientedTree::build(n, arcs);
    if (spec.scheme == GsScheme::Mask)
        return orient(t, spec.mask);
    return t;
}

OrientedTree star(int m, std::uint64_t mask)
{
    if (m < 1)
        throw Error(ErrorKind::SpecInvalid, "star needs m >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i) {
        const bool inward = (mask >> i) & 1U;
        arcs.push_back(inward ? Arc{i + 1, 0} : Arc{0, i + 1});
    }
    return OrientedTree::build(m + 1, arcs);
}

OrientedTree caterpillar(const CaterpillarSpec& spec)
{
    if (spec.spine_len < 1)
        throw Error(ErrorKind::SpecInvalid, "spine needs at least one vertex");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < spec.spine_len; ++i) {
        const bool back = (spec.spine_mask >> i) & 1U;
        arcs.push_back(back ? Arc{i + 1, i} : Arc{i, i + 1});
    }
    Vertex next = spec.spine_len;
    int leg = 0;
    for (auto [index, count] : spec.legs) {
        if (index < 1 || index > spec.spine_len - 2)
            throw Error(ErrorKind::SpecInvalid,
                        "legs must attach to interior spine vertices, got index " +
                            std::to_string(index));
        if (count < 0)
            throw Error(ErrorKind::SpecInvalid, "negative leg count");
        for (int c = 0; c < count; ++c, ++leg) {
            const bool inward = (spec.leg_mask >> leg) & 1U;
            arcs.push_back(inward ? Arc{next, index} : Arc{index, next});
            ++next;
        }
    }
    return OrientedTree::build(next, arcs);
}

OrientedTree orient(const OrientedTree& base, std::uint64_t mask)
{
    const auto arcs = base.arcs();
    if (arcs.size() < 64 && (mask >> arcs.size()) != 0)
        throw Error(ErrorKind::SpecInvalid, "mask has bits beyond the " +
                                                std::to_string(arcs.size()) + " edges");
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const bool flip = (mask >> i) & 1U;
        out.push_back(flip ? Arc{arcs[i].head, arcs[i].tail} : arcs[i]);
    }
    return OrientedTree::build(base.size(), out);
}

Orientations::Orientations(OrientedTree base)
    : base_(std::move(base)), count_(std::uint64_t{1} << (base_.size() - 1))
{
}

Orientations orientations(const OrientedTree& base)
{
    if (base.size() > kMaxOrientationN)
        throw Error(ErrorKind::TooLarge, "orientation enumeration is capped at n=" +
                                             std::to_string(kMaxOrientationN));
    return Orientations(base);
}

namespace {

std::vector<std::vector<Vertex>> adjacency(const OrientedTree& t)
{
    std::vector<std::vector<Vertex>> adj(t.size());
    for (Vertex v = 0; v < t.size(); ++v)
        adj[v] = t.neighbors(v);
    return adj;
}

std::vector<Vertex> centers(const std::vector<std::vector<Vertex>>& adj)
{
    const int n = static_cast<int>(adj.size());
    if (n <= 2) {
        std::vector<Vertex> all(n);
        for (int i = 0; i < n; ++i)
            all[i] = i;
        return all;
    }
    std::vector<int> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1)
            layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : adj[v])
                if (--deg[w] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string ahu(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent)
{
    std::vector<std::string> children;
    for (Vertex w : adj[v])
        if (w != parent)
            children.push_back(ahu(adj, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children)
        out += c;
    out += ")";
    return out;
}

// Builds a tree from a rooted parenthesis encoding, preorder ids, arcs away
// from the root.
OrientedTree from_encoding(const std::string& code)
{
    std::vector<Arc> arcs;
    std::vector<Vertex> stack;
    Vertex next = 0;
    for (char ch : code) {
        if (ch == '(') {
            if (!stack.empty())
                arcs.push_back({stack.back(), next});
            stack.push_back(next++);
        } else {
            stack.pop_back();
        }
    }
    return OrientedTree::build(next, arcs);
}

} // namespace

std::string canonical_form(const OrientedTree& t)
{
    const auto adj = adjacency(t);
    std::string best;
    for (Vertex c : centers(adj)) {
        std::string code = ahu(adj, c, -1);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return best;
}

std::vector<OrientedTree> free_trees(int n)
{
    if (n < 1 || n > kMaxFreeTreeN)
        throw Error(ErrorKind::TooLarge, "free tree enumeration supports 1 <= n <= " +
                                             std::to_string(kMaxFreeTreeN));
    // Grow every class on n-1 vertices by one leaf at each vertex; every tree
    // on n >= 2 vertices arises this way from the tree left after removing a
    // leaf.
    std::set<std::string> level{"()"};
    for (int size = 2; size <= n; ++size) {
        std::set<std::string> grown;
        for (const auto& code : level) {
            const OrientedTree t = from_encoding(code);
            std::vector<Arc> arcs(t.arcs().begin(), t.arcs().end());
            for (Vertex v = 0; v < t.size(); ++v) {
                arcs.push_back({v, t.size()});
                grown.insert(canonical_form(OrientedTree::build(t.size() + 1, arcs)));
                arcs.pop_back();
            }
        }
        level = std::move(grown);
    }
    std::vector<OrientedTree> out;
    out.reserve(level.size());
    for (const auto& code : level)
        out.push_back(from_encoding(code));
    return out;
}

OrientedTree from_pruefer(int n, const std::vector<int>& seq)
{
    if (n < 1 || static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw Error(ErrorKind::SpecInvalid, "Pruefer sequence length must be n-2");
    if (n == 1)
        return OrientedTree::build(1, {});
    std::vector<int> degree(n, 1);
    for (int x : seq) {
        if (x < 0 || x >= n)
            throw Error(ErrorKind::BadVertexId, "Pruefer entry " + std::to_string(x));
        ++degree[x];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);
    std::vector<Arc> arcs;
    for (int x : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        arcs.push_back({std::min(leaf, x), std::max(leaf, x)});
        if (--degree[x] == 1)
            leaves.insert(x);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    arcs.push_back({a, b});
    return OrientedTree::build(n, arcs);
}

OrientedTree random_tree(int n, std::uint64_t seed)
{
    if (n < 1)
        throw Error(ErrorKind::SpecInvalid, "random tree needs n >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(std::max(0, n - 2));
    for (int& x : seq)
        x = pick(rng);
    return from_pruefer(n, seq);
}

} // namespace domchrom
