#include "domchrom/closed_forms.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "domchrom/error.hpp"

namespace domchrom {

int chi_directed_path(int n)
{
    if (n < 1)
        throw Error(ErrorKind::SpecInvalid, "path needs n >= 1");
    return n;
}

bool path_orientation_min_is_extension(int n) { return n >= 1 && n <= 3; }

int chi_path_orientation_min(int n)
{
    if (n < 1)
        throw Error(ErrorKind::SpecInvalid, "path needs n >= 1");
    // Exhaustive minimum over all orientations for the sizes the formula
    // does not cover.
    static constexpr int kSmall[] = {0, 1, 2, 2};
    if (n <= 3)
        return kSmall[n];
    if (n == 6)
        return 3;
    const int k = n / 4;
    return (n % 4 <= 1) ? k + 2 : k + 3;
}

int chi_rooted(const OrientedTree& t)
{
    const RootClassification rc = classify_rooted(t);
    if (rc.out_root)
        return t.size() - directed_leaf_count(t, RootMode::OutTree) + 1;
    if (rc.in_root)
        return t.size() - directed_leaf_count(t, RootMode::InTree) + 1;
    throw Error(ErrorKind::NotRooted, "tree is neither an out-tree nor an in-tree");
}

namespace {

DominatorCertificate certify(const OrientedTree& t, std::span<const int> labels,
                             const char* construction)
{
    Verification v = verify_dominator(t, Coloring::from_labels(labels));
    if (!v.ok())
        throw std::logic_error(std::string(construction) + " failed to verify on " + encode(t));
    return std::move(*v.certificate);
}

} // namespace

StarValue chi_star(std::uint64_t mask, int m)
{
    if (m < 1)
        throw Error(ErrorKind::SpecInvalid, "star needs m >= 1");
    if (m < 64)
        mask &= (std::uint64_t{1} << m) - 1;
    const std::uint64_t full = m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    OrientedTree t = star(m, mask);

    std::vector<int> labels(m + 1);
    labels[0] = 1;
    const bool uniform = mask == 0 || mask == full;
    for (int i = 0; i < m; ++i) {
        const bool inward = (mask >> i) & 1U;
        labels[i + 1] = uniform ? 2 : (inward ? 2 : 3);
    }
    DominatorCertificate cert = certify(t, labels, "star coloring");
    const int chi = uniform ? 2 : 3;
    return {chi, std::move(t), std::move(cert)};
}

int gs_uniform_chi(int m, int k)
{
    if (m < 1 || k < 1)
        throw Error(ErrorKind::SpecInvalid, "generalized star needs m >= 1 and k >= 1");
    return m * (k - 1) + 2;
}

int gs_layered_bound(int m, int k)
{
    if (k < 2)
        throw Error(ErrorKind::KTooSmall, "layered bound needs k >= 2");
    if (m < 1)
        throw Error(ErrorKind::SpecInvalid, "generalized star needs m >= 1");
    return 3 + m * (k / 2 - 1);
}

LayeredGs build_layered_gs(int m, int k)
{
    if (k < 2)
        throw Error(ErrorKind::KTooSmall, "layered construction needs k >= 2");
    LayeredGs out{gs({m, k, GsScheme::Layered, 0}), {}, std::nullopt, {}, 0};

    // Label 1: odd layers; 2: center; 3: layer 2; then unique labels.
    std::vector<int> labels(out.tree.size());
    labels[0] = 2;
    int next = 4;
    for (int j = 0; j < m; ++j) {
        for (int layer = 1; layer <= k; ++layer) {
            const Vertex v = 1 + j * k + (layer - 1);
            if (layer % 2 == 1)
                labels[v] = 1;
            else if (layer == 2)
                labels[v] = 3;
            else
                labels[v] = next++;
        }
    }
    out.coloring = Coloring::from_labels(labels);
    out.colors = out.coloring.num_colors();
    Verification v = verify_dominator(out.tree, out.coloring);
    out.certificate = std::move(v.certificate);
    out.violations = std::move(v.violations);
    return out;
}

namespace {

std::vector<Vertex> bfs_parents(const OrientedTree& t, Vertex root, std::vector<int>& dist)
{
    std::vector<Vertex> parent(t.size(), -1);
    dist.assign(t.size(), -1);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : t.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
    }
    return parent;
}

} // namespace

CaterpillarView central_path(const OrientedTree& t)
{
    const int n = t.size();
    std::vector<Vertex> best;
    for (Vertex a = 0; a < n; ++a) {
        std::vector<int> dist;
        const auto parent = bfs_parents(t, a, dist);
        for (Vertex b = a; b < n; ++b) {
            if (b == a && n > 1)
                continue;
            const int len = dist[b] + 1;
            if (!best.empty() && len < static_cast<int>(best.size()))
                continue;
            std::vector<Vertex> seq;
            for (Vertex x = b; x != -1; x = parent[x])
                seq.push_back(x);
            std::reverse(seq.begin(), seq.end()); // starts at a
            if (best.empty() || seq.size() > best.size() || seq < best)
                best = std::move(seq);
        }
    }

    CaterpillarView view;
    view.spine = best;
    view.legs.resize(best.size());
    std::vector<int> position(n, -1);
    for (std::size_t i = 0; i < best.size(); ++i)
        position[best[i]] = static_cast<int>(i);
    for (Vertex x = 0; x < n; ++x) {
        if (position[x] >= 0)
            continue;
        const auto nbrs = t.neighbors(x);
        auto it = std::find_if(nbrs.begin(), nbrs.end(),
                               [&](Vertex w) { return position[w] >= 0; });
        if (it == nbrs.end())
            throw Error(ErrorKind::NotACaterpillar,
                        "vertex " + std::to_string(x) + " is two or more steps from the spine");
        view.legs[position[*it]].push_back({x, t.has_arc(x, *it)});
    }
    return view;
}

OrientedTree spine_subtree(const OrientedTree& t, const CaterpillarView& view)
{
    return induced_subtree(t, view.spine);
}

DominatorCertificate caterpillar_upper_coloring(const OrientedTree& t)
{
    const CaterpillarView view = central_path(t);
    const int m = static_cast<int>(view.spine.size());
    std::vector<int> labels(t.size(), 0);
    for (int i = 0; i < m; ++i)
        labels[view.spine[i]] = i + 1;
    for (int i = 0; i < m; ++i)
        for (const auto& leg : view.legs[i])
            labels[leg.vertex] = leg.into_spine ? m + 1 : m + 2 + i;
    return certify(t, labels, "caterpillar upper coloring");
}

bool spine_is_directed(const OrientedTree& t, const CaterpillarView& view)
{
    const auto& s = view.spine;
    bool forward = true, backward = true;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        forward = forward && t.has_arc(s[i], s[i + 1]);
        backward = backward && t.has_arc(s[i + 1], s[i]);
    }
    return forward || backward;
}

DominatorCertificate directed_spine_coloring(const OrientedTree& t)
{
    const CaterpillarView view = central_path(t);
    if (!spine_is_directed(t, view))
        throw Error(ErrorKind::SpineNotDirected, "spine of " + encode(t) + " is not directed");
    std::vector<Vertex> spine = view.spine;
    if (spine.size() > 1 && !t.has_arc(spine[0], spine[1]))
        std::reverse(spine.begin(), spine.end());
    std::vector<int> labels(t.size(), 1); // legs share the source end's color
    for (std::size_t i = 0; i < spine.size(); ++i)
        labels[spine[i]] = static_cast<int>(i) + 1;
    return certify(t, labels, "directed spine coloring");
}

} // namespace domchrom
