#include "ptcolor/listcolor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <vector>

namespace ptc {

std::optional<ColorLists> propagate(const Graph& g, ColorLists lists) {
    const int n = g.order();
    std::vector<int> queue;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        int s = lists.list_size(v);
        if (s == 0) return std::nullopt;
        if (s == 1) queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        if (done[static_cast<std::size_t>(v)]) continue;
        done[static_cast<std::size_t>(v)] = true;
        const ColorMask bit = lists.lists[static_cast<std::size_t>(v)];
        bool dead = false;
        g.neighbors(v).for_each([&](int w) {
            if (dead) return;
            ColorMask& lw = lists.lists[static_cast<std::size_t>(w)];
            if (!(lw & bit)) return;
            lw &= ~bit;
            int s = std::popcount(lw);
            if (s == 0) dead = true;
            else if (s == 1) queue.push_back(w);
        });
        if (dead) return std::nullopt;
    }
    return lists;
}

namespace {

// Tarjan SCC over an implication graph with 2n literal nodes.
class TwoSat {
public:
    explicit TwoSat(int vars) : n_(vars), adj_(static_cast<std::size_t>(2 * vars)) {}

    static int pos(int v) { return 2 * v; }
    static int neg(int v) { return 2 * v + 1; }

    void add_clause(int a, int b) {
        adj_[static_cast<std::size_t>(a ^ 1)].push_back(b);
        adj_[static_cast<std::size_t>(b ^ 1)].push_back(a);
    }

    std::optional<std::vector<bool>> solve() {
        const int nodes = 2 * n_;
        index_.assign(static_cast<std::size_t>(nodes), -1);
        low_.assign(static_cast<std::size_t>(nodes), 0);
        comp_.assign(static_cast<std::size_t>(nodes), -1);
        on_stack_.assign(static_cast<std::size_t>(nodes), false);
        for (int v = 0; v < nodes; ++v)
            if (index_[static_cast<std::size_t>(v)] < 0) strongconnect(v);
        std::vector<bool> value(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            int a = comp_[static_cast<std::size_t>(pos(v))], b = comp_[static_cast<std::size_t>(neg(v))];
            if (a == b) return std::nullopt;
            // components are numbered in reverse topological order
            value[static_cast<std::size_t>(v)] = a < b;
        }
        return value;
    }

private:
    void strongconnect(int v) {
        index_[static_cast<std::size_t>(v)] = low_[static_cast<std::size_t>(v)] = counter_++;
        stack_.push_back(v);
        on_stack_[static_cast<std::size_t>(v)] = true;
        for (int w : adj_[static_cast<std::size_t>(v)]) {
            if (index_[static_cast<std::size_t>(w)] < 0) {
                strongconnect(w);
                low_[static_cast<std::size_t>(v)] = std::min(low_[static_cast<std::size_t>(v)], low_[static_cast<std::size_t>(w)]);
            } else if (on_stack_[static_cast<std::size_t>(w)]) {
                low_[static_cast<std::size_t>(v)] = std::min(low_[static_cast<std::size_t>(v)], index_[static_cast<std::size_t>(w)]);
            }
        }
        if (low_[static_cast<std::size_t>(v)] == index_[static_cast<std::size_t>(v)]) {
            while (true) {
                int w = stack_.back();
                stack_.pop_back();
                on_stack_[static_cast<std::size_t>(w)] = false;
                comp_[static_cast<std::size_t>(w)] = components_;
                if (w == v) break;
            }
            ++components_;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> index_, low_, comp_, stack_;
    std::vector<bool> on_stack_;
    int counter_ = 0;
    int components_ = 0;
};

}  // namespace

std::optional<Coloring> solve_two_lists(const Graph& g, const ColorLists& lists) {
    const int n = g.order();
    std::vector<std::array<int, 2>> choice(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto cs = lists.colors_of(v);
        if (cs.size() > 2) throw std::invalid_argument("solve_two_lists: list with more than two colors");
        if (cs.empty()) return std::nullopt;
        choice[static_cast<std::size_t>(v)] = {cs[0], cs.size() == 2 ? cs[1] : cs[0]};
    }
    TwoSat sat(n);
    // literal meaning "v takes color c"; -1 when c is not on v's list
    auto lit = [&](int v, int c) {
        const auto& ch = choice[static_cast<std::size_t>(v)];
        if (ch[0] == c) return TwoSat::pos(v);
        if (ch[1] == c) return TwoSat::neg(v);
        return -1;
    };
    for (int v = 0; v < n; ++v)
        if (lists.list_size(v) == 1) sat.add_clause(TwoSat::pos(v), TwoSat::pos(v));
    for (auto [u, v] : g.edges()) {
        for (int c : lists.colors_of(u)) {
            int a = lit(u, c), b = lit(v, c);
            if (a < 0 || b < 0) continue;
            sat.add_clause(a ^ 1, b ^ 1);
        }
    }
    auto model = sat.solve();
    if (!model) return std::nullopt;
    Coloring out{lists.k, std::vector<int>(static_cast<std::size_t>(n))};
    for (int v = 0; v < n; ++v) {
        const auto& ch = choice[static_cast<std::size_t>(v)];
        out.colors[static_cast<std::size_t>(v)] = (*model)[static_cast<std::size_t>(v)] ? ch[0] : ch[1];
    }
    return out;
}

namespace {

class ExactSolver {
public:
    ExactSolver(const Graph& g, int k, ExactStats* stats) : g_(g), k_(k), stats_(stats) {}

    std::optional<Coloring> run(const ColorLists& lists) {
        // colors c, c' are interchangeable when every list holds both or neither
        color_class_.assign(static_cast<std::size_t>(k_) + 1, 0);
        for (int c = 1; c <= k_; ++c) {
            color_class_[static_cast<std::size_t>(c)] = c;
            for (int d = 1; d < c; ++d) {
                bool same = true;
                for (int v = 0; v < g_.order() && same; ++v)
                    same = lists.contains(v, c) == lists.contains(v, d);
                if (same) {
                    color_class_[static_cast<std::size_t>(c)] = color_class_[static_cast<std::size_t>(d)];
                    break;
                }
            }
        }
        std::vector<int> colors(static_cast<std::size_t>(g_.order()), 0);
        if (search(lists, VertexSet::full(g_.order()), colors)) return Coloring{k_, std::move(colors)};
        return std::nullopt;
    }

private:
    // Colors every vertex of `scope` into `out`. After propagation the
    // undecided vertices only constrain each other, so each connected piece
    // of them is solved on its own.
    bool search(const ColorLists& in, const VertexSet& scope, std::vector<int>& out) {
        if (stats_) ++stats_->nodes;
        auto state = propagate(g_, in);
        if (!state) return false;
        const ColorLists& lists = *state;
        VertexSet free(g_.order());
        scope.for_each([&](int v) {
            if (lists.singleton(v)) out[static_cast<std::size_t>(v)] = lists.single_color(v);
            else free.set(v);
        });
        if (free.empty()) return true;

        std::vector<VertexSet> pieces;
        for (VertexSet rest = free; rest.any();) {
            VertexSet piece(g_.order()), frontier(g_.order());
            frontier.set(rest.first());
            while (frontier.any()) {
                piece |= frontier;
                VertexSet grow(g_.order());
                frontier.for_each([&](int v) { grow |= g_.neighbors(v); });
                frontier = (grow & rest) - piece;
            }
            rest -= piece;
            pieces.push_back(std::move(piece));
        }
        std::sort(pieces.begin(), pieces.end(), [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
        for (const auto& piece : pieces)
            if (!branch(lists, piece, out)) return false;
        return true;
    }

    bool branch(const ColorLists& lists, const VertexSet& piece, std::vector<int>& out) {
        int best = -1, best_size = k_ + 1;
        piece.for_each([&](int v) {
            const int s = lists.list_size(v);
            if (s < best_size) best = v, best_size = s;
        });
        ColorMask used = 0;
        for (int v = 0; v < g_.order(); ++v)
            if (lists.singleton(v)) used |= lists.lists[static_cast<std::size_t>(v)];
        std::uint64_t fresh_classes_tried = 0;
        for (int c : lists.colors_of(best)) {
            if (!(used & color_bit(c))) {
                std::uint64_t cls = std::uint64_t{1} << color_class_[static_cast<std::size_t>(c)];
                if (fresh_classes_tried & cls) continue;
                fresh_classes_tried |= cls;
            }
            ColorLists next = lists;
            next.lists[static_cast<std::size_t>(best)] = color_bit(c);
            if (search(next, piece, out)) return true;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    ExactStats* stats_;
    std::vector<int> color_class_;
};

}  // namespace

std::optional<Coloring> solve_exact(const Graph& g, const ColorLists& lists, ExactStats* stats) {
    if (lists.size() != g.order()) throw std::invalid_argument("solve_exact: list count does not match graph order");
    if (lists.k > 31) throw std::invalid_argument("solve_exact: palette larger than 31 colors");
    return ExactSolver(g, lists.k, stats).run(lists);
}

std::optional<Coloring> k_coloring(const Graph& g, int k) { return solve_exact(g, ColorLists::full(g.order(), k)); }

int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1;; ++k)
        if (k_coloring(g, k)) return k;
}

}  // namespace ptc
