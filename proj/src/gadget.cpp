#include "ptcolor/gadget.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "ptcolor/detect.hpp"
#include "ptcolor/listcolor.hpp"
#include "small_graph.hpp"

namespace ptc {

namespace {

std::vector<int> others(int n, const std::vector<int>& drop) {
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
    return keep;
}

}  // namespace

GadgetCheck check_nice_critical(const Graph& h, int k, const Triple& triple, int t) {
    if (k < 3) throw std::invalid_argument("criticality level must be at least 3");
    for (int c : triple)
        if (c < 0 || c >= h.order()) throw std::invalid_argument("triple vertex out of range: " + std::to_string(c));

    const std::vector<int> tri(triple.begin(), triple.end());
    if (!h.is_independent(tri)) return {std::nullopt, "triple is not an independent set of three distinct vertices"};
    if (auto p = find_induced_path(h, t))
        return {std::nullopt, "graph contains an induced P" + std::to_string(t)};
    if (int w = clique_number(h); w != k - 1)
        return {std::nullopt, "clique number is " + std::to_string(w) + ", expected " + std::to_string(k - 1)};

    const std::vector<int> rest = others(h.order(), tri);
    std::vector<int> clique = max_clique(h.induced(rest));
    if (static_cast<int>(clique.size()) != k - 1)
        return {std::nullopt, "removing the triple lowers the clique number to " + std::to_string(clique.size())};
    for (int& v : clique) v = rest[static_cast<std::size_t>(v)];

    if (k_coloring(h, k - 1)) return {std::nullopt, "graph is " + std::to_string(k - 1) + "-colorable"};
    auto full = k_coloring(h, k);
    if (!full) return {std::nullopt, "graph is not " + std::to_string(k) + "-colorable"};

    GadgetCertificate cert;
    cert.graph = h;
    cert.k = k;
    cert.t = t;
    cert.triple = triple;
    cert.no_smaller_coloring = true;
    cert.k_coloring = *full;
    cert.omega_witness = clique;
    for (int v = 0; v < h.order(); ++v) {
        const std::vector<int> keep = others(h.order(), {v});
        auto sub = k_coloring(h.induced(keep), k - 1);
        if (!sub) return {std::nullopt, "not critical: removing vertex " + std::to_string(v) + " keeps chromatic number " + std::to_string(k)};
        Coloring lifted{k - 1, std::vector<int>(static_cast<std::size_t>(h.order()), 0)};
        for (std::size_t i = 0; i < keep.size(); ++i) lifted.colors[static_cast<std::size_t>(keep[i])] = sub->colors[i];
        cert.critical_colorings.push_back(std::move(lifted));
    }
    return {std::move(cert), {}};
}

bool certificate_consistent(const GadgetCertificate& cert) {
    const Graph& h = cert.graph;
    const int n = h.order();
    std::vector<int> tri(cert.triple.begin(), cert.triple.end());
    if (!h.is_independent(tri) || !cert.no_smaller_coloring) return false;
    if (cert.k_coloring.k != cert.k || !is_proper(h, cert.k_coloring)) return false;
    if (static_cast<int>(cert.omega_witness.size()) != cert.k - 1 || !h.is_clique(cert.omega_witness)) return false;
    for (int v : cert.omega_witness)
        if (std::find(tri.begin(), tri.end(), v) != tri.end()) return false;
    if (static_cast<int>(cert.critical_colorings.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        const Coloring& c = cert.critical_colorings[static_cast<std::size_t>(v)];
        if (c.size() != n || c[v] != 0) return false;
        for (int u = 0; u < n; ++u)
            if (u != v && (c[u] < 1 || c[u] > cert.k - 1)) return false;
        for (auto [a, b] : h.edges())
            if (a != v && b != v && c[a] == c[b]) return false;
    }
    return true;
}

namespace {

using detail::SmallGraph;

// Cheap necessary conditions for a k-critical graph with clique number k-1.
bool plausible(const SmallGraph& g, int k) {
    for (int v = 0; v < g.n; ++v)
        if (std::popcount(g.adj[static_cast<std::size_t>(v)]) < k - 1) return false;
    return detail::has_clique(g, k - 1, g.all());
}

// Least valid triple of a canonical graph, if it is a gadget.
std::optional<GadgetCertificate> gadget_of(const SmallGraph& g, int k, int t) {
    Graph h = g.to_graph();
    if (blocks(h).blocks.size() != 1) return std::nullopt;
    if (k_coloring(h, k - 1)) return std::nullopt;
    for (int v = 0; v < h.order(); ++v)
        if (!k_coloring(h.without({v}), k - 1)) return std::nullopt;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (int c = b + 1; c < g.n; ++c) {
                if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
                auto rest = static_cast<std::uint16_t>(g.all() & ~((1u << a) | (1u << b) | (1u << c)));
                if (!detail::has_clique(g, k - 1, rest)) continue;
                if (auto cert = verify_nice_critical(h, k, {a, b, c}, t)) return cert;
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<GadgetCertificate> find_nice_critical(int k, int t, int n_max, GadgetSearchStats* stats) {
    if (n_max > 10) throw std::invalid_argument("find_nice_critical: n_max above 10 is out of range");
    if (k < 3) throw std::invalid_argument("criticality level must be at least 3");
    if (stats) stats->graphs_per_order.assign(static_cast<std::size_t>(std::max(n_max, 0)) + 1, 0);
    if (n_max < 1) return std::nullopt;

    std::vector<SmallGraph> level(1);
    level[0].n = 1;
    if (stats) stats->graphs_per_order[1] = 1;

    for (int n = 2; n <= n_max; ++n) {
        const bool last = n == n_max;
        std::unordered_set<std::uint64_t> seen;
        std::vector<SmallGraph> next;
        std::vector<std::pair<std::uint64_t, SmallGraph>> candidates;
        const int x = n - 1;
        for (const SmallGraph& parent : level) {
            const auto full = static_cast<std::uint16_t>((1u << x) - 1);
            for (std::uint32_t s = 1; s <= full; ++s) {
                const auto nb = static_cast<std::uint16_t>(s);
                // the new vertex with a (k-1)-clique of its neighbors would form K_k
                if (detail::has_clique(parent, k - 1, nb)) continue;
                SmallGraph g = parent;
                g.n = n;
                g.adj[static_cast<std::size_t>(x)] = nb;
                for (std::uint16_t r = nb; r; r &= static_cast<std::uint16_t>(r - 1))
                    g.adj[static_cast<std::size_t>(std::countr_zero(r))] |= static_cast<std::uint16_t>(1u << x);
                if (last && !plausible(g, k)) continue;
                if (detail::has_induced_path(g, t, g.all())) continue;
                SmallGraph canon = detail::canonical_form(g);
                std::uint64_t code = canon.code();
                if (!seen.insert(code).second) continue;
                if (!last) next.push_back(canon);
                if (plausible(canon, k)) candidates.emplace_back(code, canon);
            }
        }
        if (stats) stats->graphs_per_order[static_cast<std::size_t>(n)] = last ? seen.size() : next.size();

        std::sort(candidates.begin(), candidates.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [code, g] : candidates) {
            if (stats) ++stats->candidates_checked;
            if (auto cert = gadget_of(g, k, t)) return cert;
        }
        level = std::move(next);
    }
    return std::nullopt;
}

namespace gadgets {

GadgetCertificate c7() {
    auto cert = verify_nice_critical(pattern::cycle(7), 3, {0, 2, 4}, 7);
    if (!cert) throw std::logic_error("C7 failed gadget verification");
    return *cert;
}

Graph h1_prime_graph() {
    // Frozen output of find_nice_critical(4, 6, 10): triangle {4,5,6}; each
    // triple vertex sees two triangle vertices and the hub 3.
    return Graph(7, {{0, 3}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 6},
                     {2, 3}, {2, 4}, {2, 5}, {4, 5}, {4, 6}, {5, 6}});
}

Triple h1_prime_triple() { return {0, 1, 2}; }

GadgetCertificate h1_prime() {
    auto cert = verify_nice_critical(h1_prime_graph(), 4, h1_prime_triple(), 6);
    if (!cert) throw std::logic_error("H1' failed gadget verification");
    return *cert;
}

}  // namespace gadgets

}  // namespace ptc
