#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// generator or canonical-form code, so agreement is independent evidence.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;

inline Edges decode_pruefer(int n, const std::vector<int>& seq)
{
    Edges edges;
    if (n == 1)
        return edges;
    std::vector<int> degree(n, 1);
    for (int x : seq)
        ++degree[x];
    for (int x : seq) {
        int leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        edges.push_back({leaf, x});
        --degree[leaf];
        --degree[x];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            (a < 0 ? a : b) = v;
    edges.push_back({a, b});
    return edges;
}

// Centroid-rooted canonical string (min over the one or two centroids).
inline std::string centroid_code(int n, const Edges& edges)
{
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> size(n, 1), parent(n, -1), order;
    std::vector<int> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0)
            size[parent[*it]] += size[*it];
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[v];
        for (int w : adj[v])
            if (w != parent[v])
                heaviest = std::max(heaviest, size[w]);
        if (2 * heaviest <= n)
            centroids.push_back(v);
    }
    std::function<std::string(int, int)> code = [&](int v, int p) {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != p)
                kids.push_back(code(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "[";
        for (auto& k : kids)
            s += k;
        return s + "]";
    };
    std::string best;
    for (int c : centroids) {
        std::string s = code(c, -1);
        if (best.empty() || s < best)
            best = s;
    }
    return best;
}

// Number of isomorphism classes of free trees on n vertices, by running over
// every Pruefer sequence.
inline std::size_t free_tree_count_by_pruefer(int n)
{
    if (n <= 2)
        return 1;
    std::set<std::string> classes;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        classes.insert(centroid_code(n, decode_pruefer(n, seq)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1)
            seq[i--] = 0;
        if (i < 0)
            break;
        ++seq[i];
    }
    return classes.size();
}

// Otter's formula: free = rooted - (sum_{i+j=n, i<j} r_i r_j) - C(r_{n/2}, 2)
// for even n, with rooted counts from the Euler-transform recurrence.
inline std::vector<std::uint64_t> free_tree_counts_otter(int max_n)
{
    std::vector<std::uint64_t> r(max_n + 1, 0);
    r[1] = 1;
    for (int n = 1; n < max_n; ++n) {
        std::uint64_t sum = 0;
        for (int k = 1; k <= n; ++k) {
            std::uint64_t s = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0)
                    s += d * r[d];
            sum += s * r[n - k + 1];
        }
        r[n + 1] = sum / n;
    }
    std::vector<std::uint64_t> f(max_n + 1, 0);
    for (int n = 1; n <= max_n; ++n) {
        std::uint64_t pairs = 0;
        for (int i = 1; 2 * i < n; ++i)
            pairs += r[i] * r[n - i];
        std::uint64_t value = r[n] - pairs;
        if (n % 2 == 0)
            value -= r[n / 2] * (r[n / 2] - 1) / 2;
        f[n] = value;
    }
    return f;
}

} // namespace oracle
