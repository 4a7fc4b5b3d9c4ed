#include "small_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace ptc::detail {

std::uint64_t SmallGraph::code() const {
    std::uint64_t c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c = (c << 1) | (adjacent(i, j) ? 1u : 0u);
    return c;
}

Graph SmallGraph::to_graph() const {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacent(i, j)) es.emplace_back(i, j);
    return Graph(n, es);
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
    if (g.order() > kSmallMax) throw std::invalid_argument("graph too large for the small-graph enumerator");
    SmallGraph s;
    s.n = g.order();
    for (auto [u, v] : g.edges()) {
        s.adj[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
        s.adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
    }
    return s;
}

namespace {

using Cells = std::vector<std::uint16_t>;

class Canonizer {
public:
    explicit Canonizer(const SmallGraph& g) : g_(g) {}

    SmallGraph run() {
        Cells start;
        if (g_.n > 0) start.push_back(g_.all());
        search(start);
        SmallGraph out;
        out.n = g_.n;
        for (int i = 0; i < g_.n; ++i)
            for (int j = 0; j < g_.n; ++j)
                if (g_.adjacent(best_lab_[static_cast<std::size_t>(i)], best_lab_[static_cast<std::size_t>(j)]))
                    out.adj[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
        return out;
    }

private:
    // Split every cell by neighbor counts into all current cells until stable.
    void refine(Cells& cells) const {
        while (true) {
            Cells next;
            next.reserve(static_cast<std::size_t>(g_.n));
            for (std::uint16_t cell : cells) {
                if (std::popcount(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::array<std::pair<std::uint64_t, int>, 16> sig{};
                int m = 0;
                for (std::uint16_t rest = cell; rest; rest &= static_cast<std::uint16_t>(rest - 1)) {
                    int v = std::countr_zero(rest);
                    std::uint64_t s = 0;
                    for (std::uint16_t other : cells)
                        s = (s << 4) | static_cast<std::uint64_t>(std::popcount(static_cast<std::uint16_t>(g_.adj[static_cast<std::size_t>(v)] & other)));
                    sig[static_cast<std::size_t>(m++)] = {s, v};
                }
                std::sort(sig.begin(), sig.begin() + m);
                std::uint16_t group = 0;
                for (int i = 0; i < m; ++i) {
                    if (i > 0 && sig[static_cast<std::size_t>(i)].first != sig[static_cast<std::size_t>(i - 1)].first) {
                        next.push_back(group);
                        group = 0;
                    }
                    group |= static_cast<std::uint16_t>(1u << sig[static_cast<std::size_t>(i)].second);
                }
                next.push_back(group);
            }
            bool stable = next.size() == cells.size();
            cells = std::move(next);
            if (stable) return;
        }
    }

    bool twins(int u, int v) const {
        auto a = static_cast<std::uint16_t>(g_.adj[static_cast<std::size_t>(u)] & ~(1u << v));
        auto b = static_cast<std::uint16_t>(g_.adj[static_cast<std::size_t>(v)] & ~(1u << u));
        return a == b;
    }

    void search(Cells cells) {
        refine(cells);
        if (static_cast<int>(cells.size()) == g_.n) {
            std::array<int, 16> lab{};
            for (std::size_t i = 0; i < cells.size(); ++i) lab[i] = std::countr_zero(cells[i]);
            std::uint64_t c = 0;
            for (int i = 0; i < g_.n; ++i)
                for (int j = i + 1; j < g_.n; ++j)
                    c = (c << 1) | (g_.adjacent(lab[static_cast<std::size_t>(i)], lab[static_cast<std::size_t>(j)]) ? 1u : 0u);
            if (!have_best_ || c > best_code_) {
                have_best_ = true;
                best_code_ = c;
                best_lab_ = lab;
            }
            return;
        }
        std::size_t target = 0;
        while (std::popcount(cells[target]) == 1) ++target;
        std::uint16_t cell = cells[target];
        std::uint16_t tried = 0;
        for (std::uint16_t rest = cell; rest; rest &= static_cast<std::uint16_t>(rest - 1)) {
            int v = std::countr_zero(rest);
            bool redundant = false;
            for (std::uint16_t t = tried; t && !redundant; t &= static_cast<std::uint16_t>(t - 1))
                redundant = twins(std::countr_zero(t), v);
            if (redundant) continue;
            tried |= static_cast<std::uint16_t>(1u << v);
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(static_cast<std::uint16_t>(1u << v));
            child.push_back(static_cast<std::uint16_t>(cell & ~(1u << v)));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            search(std::move(child));
        }
    }

    const SmallGraph& g_;
    bool have_best_ = false;
    std::uint64_t best_code_ = 0;
    std::array<int, 16> best_lab_{};
};

bool path_from(const SmallGraph& g, int remaining, int last, std::uint16_t blocked, std::uint16_t within) {
    if (remaining == 0) return true;
    auto cand = static_cast<std::uint16_t>(g.adj[static_cast<std::size_t>(last)] & within & ~blocked);
    auto next_blocked = static_cast<std::uint16_t>(blocked | g.adj[static_cast<std::size_t>(last)] | (1u << last));
    for (; cand; cand &= static_cast<std::uint16_t>(cand - 1))
        if (path_from(g, remaining - 1, std::countr_zero(cand), next_blocked, within)) return true;
    return false;
}

bool clique_in(const SmallGraph& g, int k, std::uint16_t cand) {
    if (k == 0) return true;
    if (std::popcount(cand) < k) return false;
    for (; cand; cand &= static_cast<std::uint16_t>(cand - 1)) {
        int v = std::countr_zero(cand);
        auto rest = static_cast<std::uint16_t>(cand & g.adj[static_cast<std::size_t>(v)] & ~((2u << v) - 1));
        if (clique_in(g, k - 1, rest)) return true;
    }
    return false;
}

}  // namespace

SmallGraph canonical_form(const SmallGraph& g) { return Canonizer(g).run(); }

bool has_induced_path(const SmallGraph& g, int t, std::uint16_t within) {
    for (std::uint16_t s = within; s; s &= static_cast<std::uint16_t>(s - 1))
        if (path_from(g, t - 1, std::countr_zero(s), 0, within)) return true;
    return false;
}

bool has_clique(const SmallGraph& g, int k, std::uint16_t within) { return clique_in(g, k, within); }

}  // namespace ptc::detail
