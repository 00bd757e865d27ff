#include "domchrom/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "domchrom/error.hpp"

namespace domchrom {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::SelfArc: return "SelfArc";
    case ErrorKind::DuplicateOrAntiparallelArc: return "DuplicateOrAntiparallelArc";
    case ErrorKind::BadVertexId: return "BadVertexId";
    case ErrorKind::NotRooted: return "NotRooted";
    case ErrorKind::NotALeaf: return "NotALeaf";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::KTooSmall: return "KTooSmall";
    case ErrorKind::NotACaterpillar: return "NotACaterpillar";
    case ErrorKind::SpineNotDirected: return "SpineNotDirected";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

class DisjointSets {
  public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[b] = a;
        return true;
    }

  private:
    std::vector<int> parent_;
};

} // namespace

OrientedTree OrientedTree::build(int n, std::span<const Arc> arcs)
{
    if (n < 1)
        throw Error(ErrorKind::NotATree, "a tree needs at least one vertex");

    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Arc& a : arcs) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw Error(ErrorKind::BadVertexId, "arc (" + std::to_string(a.tail) + "," +
                                                    std::to_string(a.head) + ") outside 0.." +
                                                    std::to_string(n - 1));
        if (a.tail == a.head)
            throw Error(ErrorKind::SelfArc, "self-arc at " + std::to_string(a.tail));
        auto key = std::minmax(a.tail, a.head);
        if (!seen.insert({key.first, key.second}).second)
            throw Error(ErrorKind::DuplicateOrAntiparallelArc,
                        "pair {" + std::to_string(key.first) + "," + std::to_string(key.second) +
                            "} appears twice");
    }
    if (static_cast<int>(arcs.size()) != n - 1)
        throw Error(ErrorKind::NotATree, "expected " + std::to_string(n - 1) + " arcs, got " +
                                             std::to_string(arcs.size()));

    DisjointSets dsu(n);
    for (const Arc& a : arcs)
        if (!dsu.unite(a.tail, a.head))
            throw Error(ErrorKind::NotATree, "underlying cycle through (" +
                                                 std::to_string(a.tail) + "," +
                                                 std::to_string(a.head) + ")");
    // n-1 arcs and no cycle imply connected.

    OrientedTree t;
    t.n_ = n;
    t.arcs_.assign(arcs.begin(), arcs.end());
    std::sort(t.arcs_.begin(), t.arcs_.end());
    t.out_.resize(n);
    t.in_.resize(n);
    for (const Arc& a : t.arcs_) {
        t.out_[a.tail].push_back(a.head);
        t.in_[a.head].push_back(a.tail);
    }
    for (auto& l : t.in_)
        std::sort(l.begin(), l.end());
    return t;
}

bool OrientedTree::has_arc(Vertex tail, Vertex head) const
{
    const auto& o = out_[tail];
    return std::binary_search(o.begin(), o.end(), head);
}

std::vector<Vertex> OrientedTree::neighbors(Vertex v) const
{
    std::vector<Vertex> result(out_[v].begin(), out_[v].end());
    result.insert(result.end(), in_[v].begin(), in_[v].end());
    std::sort(result.begin(), result.end());
    return result;
}

DegreeProfile degree_profile(const OrientedTree& t)
{
    DegreeProfile p;
    const int n = t.size();
    p.out_degree.resize(n);
    p.in_degree.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        p.out_degree[v] = t.out_degree(v);
        p.in_degree[v] = t.in_degree(v);
        if (p.in_degree[v] == 0)
            p.sources.push_back(v);
        if (p.out_degree[v] == 0)
            p.sinks.push_back(v);
        if (t.degree(v) == 1)
            p.underlying_leaves.push_back(v);
    }
    return p;
}

OrientedTree reverse(const OrientedTree& t)
{
    std::vector<Arc> flipped;
    flipped.reserve(t.arcs().size());
    for (const Arc& a : t.arcs())
        flipped.push_back({a.head, a.tail});
    return OrientedTree::build(t.size(), flipped);
}

RootClassification classify_rooted(const OrientedTree& t)
{
    RootClassification rc;
    std::optional<Vertex> source;
    std::optional<Vertex> sink;
    int sources = 0, sinks = 0;
    bool in_le_one = true, out_le_one = true;
    for (Vertex v = 0; v < t.size(); ++v) {
        if (t.in_degree(v) == 0) {
            ++sources;
            source = v;
        }
        if (t.out_degree(v) == 0) {
            ++sinks;
            sink = v;
        }
        in_le_one = in_le_one && t.in_degree(v) <= 1;
        out_le_one = out_le_one && t.out_degree(v) <= 1;
    }
    // With n-1 arcs, a single source and all other in-degrees equal to 1 is
    // the same as "in-degree <= 1 everywhere".
    if (sources == 1 && in_le_one)
        rc.out_root = source;
    if (sinks == 1 && out_le_one)
        rc.in_root = sink;
    return rc;
}

int directed_leaf_count(const OrientedTree& t, RootMode mode)
{
    const RootClassification rc = classify_rooted(t);
    const DegreeProfile p = degree_profile(t);
    if (mode == RootMode::OutTree) {
        if (!rc.out_root)
            throw Error(ErrorKind::NotRooted, "tree is not an out-tree");
        return static_cast<int>(p.sinks.size());
    }
    if (!rc.in_root)
        throw Error(ErrorKind::NotRooted, "tree is not an in-tree");
    return static_cast<int>(p.sources.size());
}

LeafDeletion delete_leaf(const OrientedTree& t, Vertex v)
{
    if (v < 0 || v >= t.size())
        throw Error(ErrorKind::BadVertexId, "vertex " + std::to_string(v));
    if (t.degree(v) != 1)
        throw Error(ErrorKind::NotALeaf, "vertex " + std::to_string(v) + " has tree degree " +
                                             std::to_string(t.degree(v)));
    std::vector<Vertex> relabel(t.size(), -1);
    Vertex next = 0;
    for (Vertex x = 0; x < t.size(); ++x)
        if (x != v)
            relabel[x] = next++;
    std::vector<Arc> arcs;
    for (const Arc& a : t.arcs())
        if (a.tail != v && a.head != v)
            arcs.push_back({relabel[a.tail], relabel[a.head]});
    return {OrientedTree::build(t.size() - 1, arcs), std::move(relabel)};
}

OrientedTree induced_subtree(const OrientedTree& t, std::span<const Vertex> keep)
{
    std::vector<Vertex> relabel(t.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        relabel[keep[i]] = static_cast<Vertex>(i);
    std::vector<Arc> arcs;
    for (const Arc& a : t.arcs())
        if (relabel[a.tail] >= 0 && relabel[a.head] >= 0)
            arcs.push_back({relabel[a.tail], relabel[a.head]});
    return OrientedTree::build(static_cast<int>(keep.size()), arcs);
}

std::string encode(const OrientedTree& t)
{
    std::string out = std::to_string(t.size()) + ":";
    bool first = true;
    for (const Arc& a : t.arcs()) {
        if (!first)
            out += ',';
        first = false;
        out += std::to_string(a.tail) + ">" + std::to_string(a.head);
    }
    return out;
}

namespace {

int parse_int(std::string_view s)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(s) + "'");
    return value;
}

} // namespace

OrientedTree decode(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::ParseError, "missing ':' in encoding '" + text + "'");
    const int n = parse_int(std::string_view(text).substr(0, colon));
    std::vector<Arc> arcs;
    std::string_view rest = std::string_view(text).substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        const auto gt = item.find('>');
        if (gt == std::string_view::npos)
            throw Error(ErrorKind::ParseError, "bad arc '" + std::string(item) + "'");
        arcs.push_back({parse_int(item.substr(0, gt)), parse_int(item.substr(gt + 1))});
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    return OrientedTree::build(n, arcs);
}

} // namespace domchrom
