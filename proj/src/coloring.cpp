#include "domchrom/coloring.hpp"

#include <algorithm>
#include <unordered_map>

#include "domchrom/error.hpp"

namespace domchrom {

Coloring Coloring::from_labels(std::span<const int> labels)
{
    Coloring c;
    std::unordered_map<int, ColorId> relabel;
    c.colors_.reserve(labels.size());
    for (int label : labels) {
        auto [it, inserted] = relabel.try_emplace(label, c.k_ + 1);
        if (inserted)
            ++c.k_;
        c.colors_.push_back(it->second);
    }
    return c;
}

Coloring canonicalize(std::span<const int> labels) { return Coloring::from_labels(labels); }

namespace {

void require_size(const OrientedTree& t, const Coloring& c)
{
    if (c.size() != t.size())
        throw Error(ErrorKind::SizeMismatch, "coloring has " + std::to_string(c.size()) +
                                                 " vertices, tree has " +
                                                 std::to_string(t.size()));
}

std::vector<int> class_sizes(const Coloring& c)
{
    std::vector<int> sizes(c.num_colors() + 1, 0);
    for (ColorId col : c.colors())
        ++sizes[col];
    return sizes;
}

std::vector<ColorId> dominated_with_sizes(const OrientedTree& t, const Coloring& c,
                                          const std::vector<int>& sizes, Vertex v)
{
    // Out-neighbors are distinct, so the class lies inside N+(v) iff every
    // member is counted here.
    std::vector<std::pair<ColorId, int>> counts;
    for (Vertex w : t.out_neighbors(v)) {
        auto it = std::find_if(counts.begin(), counts.end(),
                               [&](const auto& p) { return p.first == c[w]; });
        if (it == counts.end())
            counts.emplace_back(c[w], 1);
        else
            ++it->second;
    }
    std::vector<ColorId> result;
    for (auto [col, cnt] : counts)
        if (cnt == sizes[col])
            result.push_back(col);
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace

std::vector<Violation> is_proper(const OrientedTree& t, const Coloring& c)
{
    require_size(t, c);
    std::vector<Violation> out;
    for (const Arc& a : t.arcs())
        if (c[a.tail] == c[a.head])
            out.push_back({Violation::Kind::ImproperEdge, a, -1});
    return out;
}

std::vector<ColorId> dominated_classes(const OrientedTree& t, const Coloring& c, Vertex v)
{
    require_size(t, c);
    return dominated_with_sizes(t, c, class_sizes(c), v);
}

Verification verify_dominator(const OrientedTree& t, const Coloring& c)
{
    Verification result;
    result.violations = is_proper(t, c);
    const auto sizes = class_sizes(c);
    std::vector<Witness> witness(t.size());
    for (Vertex v = 0; v < t.size(); ++v) {
        if (t.out_degree(v) == 0) {
            witness[v] = {Witness::Kind::SinkExempt, 0};
            continue;
        }
        const auto dom = dominated_with_sizes(t, c, sizes, v);
        if (dom.empty())
            result.violations.push_back({Violation::Kind::NoDominatedClass, {}, v});
        else
            witness[v] = {Witness::Kind::DominatedClass, dom.front()};
    }
    if (result.violations.empty())
        result.certificate = DominatorCertificate{c, std::move(witness)};
    return result;
}

bool check_certificate(const OrientedTree& t, const DominatorCertificate& cert)
{
    const Coloring& c = cert.coloring;
    if (c.size() != t.size() || static_cast<int>(cert.witness.size()) != t.size())
        return false;
    for (const Arc& a : t.arcs())
        if (c[a.tail] == c[a.head])
            return false;
    for (Vertex v = 0; v < t.size(); ++v) {
        const Witness& w = cert.witness[v];
        if (w.kind == Witness::Kind::SinkExempt) {
            if (t.out_degree(v) != 0)
                return false;
            continue;
        }
        if (w.color < 1 || w.color > c.num_colors())
            return false;
        bool nonempty = false;
        for (Vertex x = 0; x < t.size(); ++x) {
            if (c[x] != w.color)
                continue;
            nonempty = true;
            if (!t.has_arc(v, x))
                return false;
        }
        if (!nonempty)
            return false;
    }
    return true;
}

} // namespace domchrom
