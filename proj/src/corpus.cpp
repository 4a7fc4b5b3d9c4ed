#include "ptcolor/corpus.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ptc {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::optional<InducedCertificate> violation(const Graph& g, GraphClass cls, bool forbid_c5) {
    if (auto v = class_violation(g, cls)) return v;
    if (forbid_c5) return find_induced(g, pattern::cycle(5), "C5");
    return std::nullopt;
}

// Random relabeling so planted bases do not always sit at 0..4 / 0..6.
Graph shuffled(const Graph& g, InstanceRng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.order() - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.below(i + 1))]);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.order(), es);
}

Graph random_graph(int n, InstanceRng& rng) {
    const double p = 0.15 + 0.6 * rng.unit();
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) es.emplace_back(u, v);
    return Graph(n, es);
}

// Grows `base` one vertex at a time up to `target` vertices: a proposal
// attaches to the base through `mask_for()` and to each earlier extra with a
// per-instance density, and is deleted again if it creates a violation.
// Planted growth also mostly rejects proposals that close a K5.
template <class MaskFn>
Graph grow(const Graph& base, int target, GraphClass cls, bool forbid_c5, InstanceRng& rng, MaskFn mask_for) {
    const int b = base.order();
    std::vector<Edge> es = base.edges();
    int n = b;
    const double q = 0.15 + 0.5 * rng.unit();
    for (int attempt = 0; n < target && attempt < 60 * (target - b); ++attempt) {
        std::vector<Edge> trial = es;
        const unsigned mask = mask_for();
        for (int i = 0; i < b; ++i)
            if (mask >> i & 1u) trial.emplace_back(n, i);
        for (int y = b; y < n; ++y)
            if (rng.chance(q)) trial.emplace_back(y, n);
        Graph g(n + 1, trial);
        if (violation(g, cls, forbid_c5)) continue;
        // K5 decides a block outright; keep most growth below it so the cycle routes run
        if (b > 0 && !rng.chance(0.1) && has_clique(g, 5)) continue;
        es = std::move(trial);
        ++n;
    }
    return Graph(n, es);
}

unsigned rot(unsigned bits, int by, int len) {
    unsigned out = 0;
    for (int i = 0; i < len; ++i)
        if (bits >> i & 1u) out |= 1u << ((i + by) % len);
    return out;
}

Graph planted_c5(int target, GraphClass cls, InstanceRng& rng) {
    // S0, S1(v0), S2(v0), S3(v0), S4(v0), S5 shapes, rotated
    static constexpr unsigned shapes[] = {0b00000, 0b00001, 0b01100, 0b10011, 0b11110, 0b11111};
    static constexpr int weights[] = {1, 3, 3, 2, 2, 1};
    return grow(pattern::cycle(5), target, cls, false, rng, [&] {
        int pick = rng.below(12);
        int s = 0;
        while (pick >= weights[s]) pick -= weights[s++];
        return rot(shapes[s], rng.below(5), 5);
    });
}

Graph planted_c7bar(int target, GraphClass cls, InstanceRng& rng) {
    return grow(pattern::c7_complement(), target, cls, true, rng, [&] {
        for (;;) {
            unsigned m = static_cast<unsigned>(rng.below(128));
            int c = std::popcount(m);
            if (c < 2) continue;
            if (c == 7 && !rng.chance(0.3)) continue;
            bool consecutive_pair = false;
            for (int i = 0; i < 7; ++i)
                if (m == ((1u << i) | (1u << ((i + 1) % 7)))) consecutive_pair = true;
            if (!consecutive_pair) return m;
        }
    });
}

}  // namespace

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t id) : engine_(splitmix(splitmix(seed) ^ id)) {}

std::vector<int> repair_into_class(Graph& g, GraphClass cls, InstanceRng& rng, const std::vector<int>& protect,
                                   bool forbid_c5) {
    std::vector<int> alive(static_cast<std::size_t>(g.order()));
    std::iota(alive.begin(), alive.end(), 0);
    while (auto cert = violation(g, cls, forbid_c5)) {
        std::vector<int> victims;
        for (int v : cert->vertices)
            if (std::find(protect.begin(), protect.end(), alive[static_cast<std::size_t>(v)]) == protect.end())
                victims.push_back(v);
        if (victims.empty()) throw std::invalid_argument("repair_into_class: protected vertices are not in the class");
        std::sort(victims.begin(), victims.end());
        const int drop = victims[static_cast<std::size_t>(rng.below(static_cast<int>(victims.size())))];
        g = g.without({drop});
        alive.erase(alive.begin() + drop);
    }
    return alive;
}

std::vector<CorpusEntry> gen_corpus(int n, int count, std::uint64_t seed, GraphClass cls) {
    if (n < 1 || n > 20) throw std::invalid_argument("gen_corpus: n must be in 1..20");
    std::vector<CorpusEntry> out;
    for (int id = 0; id < count; ++id) {
        InstanceRng rng(seed, static_cast<std::uint64_t>(id));
        CorpusEntry e;
        e.id = id;
        const int kind = id % 4;
        const int low = std::min(n, 5);
        if (kind == 2 && n >= 5) {
            e.kind = "planted_c5";
            e.graph = planted_c5(5 + rng.below(n - 5 + 1), cls, rng);
        } else if (kind == 3 && n >= 7) {
            e.kind = "planted_c7bar";
            e.graph = planted_c7bar(7 + rng.below(n - 7 + 1), cls, rng);
        } else if (kind == 1) {
            e.kind = "grown";
            e.graph = grow(Graph(0, {}), low + rng.below(n - low + 1), cls, false, rng, [] { return 0u; });
        } else {
            e.kind = "random";
            e.graph = random_graph(n, rng);
            repair_into_class(e.graph, cls, rng);
        }
        e.graph = shuffled(e.graph, rng);
        out.push_back(std::move(e));
    }
    return out;
}

CnfFormula random_cnf(int n_vars, int m, InstanceRng& rng) {
    if (n_vars < 3) throw std::invalid_argument("random_cnf: need at least 3 variables");
    CnfFormula f{n_vars, {}};
    for (int j = 0; j < m; ++j) {
        std::array<int, 3> cl{};
        for (int s = 0; s < 3; ++s) {
            int v;
            do v = rng.below(n_vars) + 1;
            while (std::any_of(cl.begin(), cl.begin() + s, [v](int lit) { return std::abs(lit) == v; }));
            cl[static_cast<std::size_t>(s)] = (rng.next() & 1) ? v : -v;
        }
        f.clauses.push_back(cl);
    }
    return f;
}

}  // namespace ptc
