#include "domchrom/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>

#include "domchrom/error.hpp"

namespace domchrom {

std::vector<bool> forced_singletons(const OrientedTree& t)
{
    std::vector<bool> forced(t.size(), false);
    for (Vertex u = 0; u < t.size(); ++u)
        if (t.out_degree(u) == 1)
            forced[t.out_neighbors(u)[0]] = true;
    return forced;
}

int trivial_lower_bound(const OrientedTree& t)
{
    if (t.size() == 1)
        return 1;
    const auto forced = forced_singletons(t);
    const int s = static_cast<int>(std::count(forced.begin(), forced.end(), true));
    // Every orientation of a tree has a source, and sources are never forced,
    // so at least one more color is always needed.
    return std::max(2, 1 + s);
}

Coloring greedy_upper_bound(const OrientedTree& t)
{
    std::vector<int> labels(t.size());
    std::iota(labels.begin(), labels.end(), 1);
    bool merged = true;
    while (merged) {
        merged = false;
        Coloring current = Coloring::from_labels(labels);
        const int k = current.num_colors();
        for (int a = 1; a <= k && !merged; ++a) {
            for (int b = a + 1; b <= k && !merged; ++b) {
                std::vector<int> trial(current.colors().begin(), current.colors().end());
                for (int& c : trial)
                    if (c == b)
                        c = a;
                if (verify_dominator(t, Coloring::from_labels(trial)).ok()) {
                    labels = std::move(trial);
                    merged = true;
                }
            }
        }
    }
    return Coloring::from_labels(labels);
}

int brute_force_chi(const OrientedTree& t)
{
    const int n = t.size();
    if (n > kBruteForceMaxN)
        throw Error(ErrorKind::TooLarge, "brute force is capped at n=" +
                                             std::to_string(kBruteForceMaxN));
    // Restricted-growth strings: a[0]=1, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(n, 1);
    std::vector<int> prefix_max(n, 1);
    int best = n;
    while (true) {
        const Coloring c = Coloring::from_labels(a);
        if (c.num_colors() < best && verify_dominator(t, c).ok())
            best = c.num_colors();
        int i = n - 1;
        while (i > 0 && a[i] == prefix_max[i - 1] + 1)
            --i;
        if (i == 0)
            break;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 1;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
    return best;
}

namespace {

std::vector<Vertex> search_order(const OrientedTree& t, VertexOrder policy)
{
    const int n = t.size();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (policy == VertexOrder::Natural)
        return order;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return t.degree(a) > t.degree(b); });
    if (policy == VertexOrder::DegreeDescending)
        return order;

    std::vector<Vertex> bfs;
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{order.front()};
    seen[order.front()] = true;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        bfs.push_back(v);
        for (Vertex w : t.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    }
    return bfs;
}

class Search {
  public:
    Search(const OrientedTree& t, const SolveOptions& opts, SearchStats& stats)
        : t_(t), opts_(opts), stats_(stats), order_(search_order(t, opts.vertex_order)),
          forced_(forced_singletons(t))
    {
    }

    // Fills `out` with a coloring using at most k colors, if one exists.
    bool run(int k, std::vector<int>& out)
    {
        const int n = t_.size();
        k_ = k;
        color_.assign(n, 0);
        class_size_.assign(k + 2, 0);
        forced_class_.assign(k + 2, false);
        out_color_count_.assign(static_cast<std::size_t>(n) * (k + 2), 0);
        uncolored_out_.resize(n);
        for (Vertex v = 0; v < n; ++v)
            uncolored_out_[v] = t_.out_degree(v);
        used_ = 0;
        forced_left_ = static_cast<int>(std::count(forced_.begin(), forced_.end(), true));
        if (!descend(0))
            return false;
        out = color_;
        return true;
    }

  private:
    bool descend(int depth)
    {
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (depth == t_.size())
            return true;
        const Vertex v = order_[depth];
        const int limit = std::min(used_ + 1, k_);
        for (int c = 1; c <= limit; ++c) {
            if (!admissible(v, c))
                continue;
            ++stats_.nodes;
            if (opts_.node_budget && stats_.nodes > *opts_.node_budget)
                throw Error(ErrorKind::BudgetExhausted,
                            "node budget " + std::to_string(*opts_.node_budget) + " exceeded");
            const int saved_used = used_;
            assign(v, c);
            if (domination_feasible()) {
                if (descend(depth + 1))
                    return true;
            } else {
                ++stats_.prunes_domination;
            }
            unassign(v, c);
            used_ = saved_used;
        }
        return false;
    }

    bool admissible(Vertex v, int c)
    {
        for (Vertex w : t_.out_neighbors(v))
            if (color_[w] == c) {
                ++stats_.prunes_proper;
                return false;
            }
        for (Vertex w : t_.in_neighbors(v))
            if (color_[w] == c) {
                ++stats_.prunes_proper;
                return false;
            }
        const bool fresh = c > used_;
        if ((forced_[v] && !fresh) || (!forced_[v] && forced_class_[c])) {
            ++stats_.prunes_singleton;
            return false;
        }
        // Each remaining forced vertex needs a color no one else uses yet.
        const int forced_after = forced_left_ - (forced_[v] ? 1 : 0);
        if (std::max(used_, c) + forced_after > k_) {
            ++stats_.prunes_singleton;
            return false;
        }
        return true;
    }

    int& out_count(Vertex u, int c) { return out_color_count_[u * (k_ + 2) + c]; }

    void assign(Vertex v, int c)
    {
        color_[v] = c;
        ++class_size_[c];
        used_ = std::max(used_, c);
        if (forced_[v]) {
            forced_class_[c] = true;
            --forced_left_;
        }
        for (Vertex u : t_.in_neighbors(v)) {
            ++out_count(u, c);
            --uncolored_out_[u];
        }
    }

    void unassign(Vertex v, int c)
    {
        color_[v] = 0;
        --class_size_[c];
        if (forced_[v]) {
            forced_class_[c] = false;
            ++forced_left_;
        }
        for (Vertex u : t_.in_neighbors(v)) {
            --out_count(u, c);
            ++uncolored_out_[u];
        }
    }

    // A vertex whose out-neighborhood is fully colored must already contain a
    // whole class; classes only grow from here on.
    bool domination_feasible()
    {
        for (Vertex u = 0; u < t_.size(); ++u) {
            if (t_.out_degree(u) == 0 || uncolored_out_[u] != 0)
                continue;
            bool found = false;
            for (Vertex w : t_.out_neighbors(u)) {
                const int c = color_[w];
                if (out_count(u, c) == class_size_[c]) {
                    found = true;
                    break;
                }
            }
            if (!found)
                return false;
        }
        return true;
    }

    const OrientedTree& t_;
    const SolveOptions& opts_;
    SearchStats& stats_;
    std::vector<Vertex> order_;
    std::vector<bool> forced_;

    int k_ = 0;
    int used_ = 0;
    int forced_left_ = 0;
    std::vector<int> color_;
    std::vector<int> class_size_;
    std::vector<bool> forced_class_;
    std::vector<int> out_color_count_;
    std::vector<int> uncolored_out_;
};

} // namespace

SolveResult solve_exact(const OrientedTree& t, const SolveOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    const Coloring upper = greedy_upper_bound(t);
    const int lower = trivial_lower_bound(t);

    Search search(t, options, result.stats);
    std::optional<Coloring> best;
    for (int k = lower; k < upper.num_colors(); ++k) {
        std::vector<int> found;
        if (search.run(k, found)) {
            best = Coloring::from_labels(found);
            break;
        }
    }
    if (!best)
        best = upper;

    Verification check = verify_dominator(t, *best);
    if (!check.ok())
        throw std::logic_error("solver produced an invalid coloring for " + encode(t));
    result.chi = best->num_colors();
    result.certificate = std::move(*check.certificate);
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

} // namespace domchrom
