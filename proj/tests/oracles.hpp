#pragma once

// Brute-force references for the unit tests. Nothing here calls the
// library's search code; only Graph adjacency queries are used.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ptcolor/graph.hpp"

namespace oracle {

using ptc::Graph;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<ptc::Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) es.emplace_back(u, v);
    return Graph(n, es);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<ptc::Edge> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.order(), es);
}

inline std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Every assignment in {1..k}^n; `allowed(v, c)` filters colors.
inline std::vector<std::vector<int>> all_colorings(const Graph& g, int k,
                                                   const std::function<bool(int, int)>& allowed = nullptr) {
    const int n = g.order();
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(n), 1);
    if (n == 0) return {c};
    for (;;) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (allowed && !allowed(v, c[static_cast<std::size_t>(v)])) ok = false;
        for (auto [u, v] : g.edges())
            if (ok && c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) ok = false;
        if (ok) out.push_back(c);
        int i = 0;
        while (i < n && c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = 1;
        if (i == n) break;
        ++c[static_cast<std::size_t>(i)];
    }
    return out;
}

inline bool colorable(const Graph& g, int k) { return !all_colorings(g, k).empty(); }

/// Plain in-order backtracking, stopping at the first proper k-coloring.
inline bool backtrack_colorable(const Graph& g, int k) {
    const int n = g.order();
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    std::function<bool(int, int)> rec = [&](int v, int used) {
        if (v == n) return true;
        for (int col = 1; col <= std::min(k, used + 1); ++col) {
            bool ok = true;
            for (int w = 0; w < v && ok; ++w) ok = !(g.adjacent(v, w) && c[static_cast<std::size_t>(w)] == col);
            if (!ok) continue;
            c[static_cast<std::size_t>(v)] = col;
            if (rec(v + 1, std::max(used, col))) return true;
        }
        return false;
    };
    return rec(0, 0);
}

inline bool proper(const Graph& g, const std::vector<int>& c) {
    for (auto [u, v] : g.edges())
        if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
    return true;
}

/// Some ordered vertex tuple inducing `h`, by subsets and permutations.
inline bool has_induced(const Graph& g, const Graph& h) {
    const int n = g.order(), k = h.order();
    if (k > n) return false;
    std::vector<int> sel(static_cast<std::size_t>(n), 0);
    std::fill(sel.begin(), sel.begin() + k, 1);
    do {
        std::vector<int> pick;
        for (int v = 0; v < n; ++v)
            if (sel[static_cast<std::size_t>(v)]) pick.push_back(v);
        std::sort(pick.begin(), pick.end());
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = i + 1; j < k && ok; ++j)
                    ok = g.adjacent(pick[static_cast<std::size_t>(i)], pick[static_cast<std::size_t>(j)]) == h.adjacent(i, j);
            if (ok) return true;
        } while (std::next_permutation(pick.begin(), pick.end()));
    } while (std::prev_permutation(sel.begin(), sel.end()));
    return false;
}

inline Graph path(int t) {
    std::vector<ptc::Edge> es;
    for (int i = 0; i + 1 < t; ++i) es.emplace_back(i, i + 1);
    return Graph(t, es);
}

inline Graph cycle(int l) {
    std::vector<ptc::Edge> es;
    for (int i = 0; i < l; ++i) es.emplace_back(i, (i + 1) % l);
    return Graph(l, es);
}

inline Graph complete(int k) {
    std::vector<ptc::Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
    return Graph(k, es);
}

inline int clique_number(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1u) && (mask >> v & 1u) && !g.adjacent(u, v)) ok = false;
        if (ok) best = size;
    }
    return best;
}

inline int components_without(const Graph& g, int skip) {
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    int comps = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (s == skip || seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < g.order(); ++w)
                if (w != skip && !seen[static_cast<std::size_t>(w)] && g.adjacent(v, w)) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

inline std::set<int> cut_vertices(const Graph& g) {
    std::set<int> out;
    const int base = components_without(g, -1);
    for (int v = 0; v < g.order(); ++v) {
        // deleting an isolated vertex removes a component; not a cut
        if (g.degree(v) == 0) continue;
        if (components_without(g, v) > base) out.insert(v);
    }
    return out;
}

/// Edge classes of the "lie on a common cycle" relation, as vertex sets, plus
/// isolated vertices as singletons. Edge e = ab joins f iff some simple b-a
/// path avoiding e uses f.
inline std::set<std::vector<int>> blocks(const Graph& g) {
    auto edges = g.edges();
    const std::size_t m = edges.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto index_of = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), ptc::Edge{u, v}) - edges.begin());
    };
    for (std::size_t e = 0; e < m; ++e) {
        auto [a, b] = edges[e];
        std::vector<int> on(static_cast<std::size_t>(g.order()), 0);
        std::vector<int> path{b};
        on[static_cast<std::size_t>(b)] = 1;
        std::function<void()> dfs = [&] {
            int x = path.back();
            for (int y = 0; y < g.order(); ++y) {
                if (!g.adjacent(x, y) || on[static_cast<std::size_t>(y)]) continue;
                if (x == b && y == a) continue;
                if (y == a) {
                    for (std::size_t i = 0; i + 1 < path.size(); ++i) parent[find(index_of(path[i], path[i + 1]))] = find(e);
                    parent[find(index_of(x, a))] = find(e);
                    continue;
                }
                on[static_cast<std::size_t>(y)] = 1;
                path.push_back(y);
                dfs();
                path.pop_back();
                on[static_cast<std::size_t>(y)] = 0;
            }
        };
        dfs();
    }
    std::map<std::size_t, std::set<int>> classes;
    for (std::size_t e = 0; e < m; ++e) {
        classes[find(e)].insert(edges[e].first);
        classes[find(e)].insert(edges[e].second);
    }
    std::set<std::vector<int>> out;
    for (auto& [root, vs] : classes) out.insert(std::vector<int>(vs.begin(), vs.end()));
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out.insert({v});
    return out;
}

}  // namespace oracle
