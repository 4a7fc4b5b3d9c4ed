#include "ptcolor/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace ptc {

int ColorLists::list_size(int v) const { return std::popcount(lists[static_cast<std::size_t>(v)]); }

bool ColorLists::singleton(int v) const { return list_size(v) == 1; }

int ColorLists::single_color(int v) const { return std::countr_zero(lists[static_cast<std::size_t>(v)]) + 1; }

std::vector<int> ColorLists::colors_of(int v) const {
    std::vector<int> out;
    for (int c = 1; c <= k; ++c)
        if (contains(v, c)) out.push_back(c);
    return out;
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.size() != g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (c[v] < 1 || c[v] > c.k) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

bool respects_lists(const Graph& g, const ColorLists& lists, const Coloring& c) {
    if (!is_proper(g, c) || lists.size() != g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!lists.contains(v, c[v])) return false;
    return true;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (!rows_[static_cast<std::size_t>(u)].test(v)) {
            rows_[static_cast<std::size_t>(u)].set(v);
            rows_[static_cast<std::size_t>(v)].set(u);
            ++m_;
        }
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = neighbors(u).next(u); v >= 0; v = neighbors(u).next(v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    Graph h;
    h.n_ = n_;
    h.rows_.reserve(rows_.size());
    for (int v = 0; v < n_; ++v) {
        VertexSet r = neighbors(v).complement();
        r.reset(v);
        h.rows_.push_back(std::move(r));
    }
    h.m_ = n_ * (n_ - 1) / 2 - m_;
    return h;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i)
        neighbors(keep[i]).for_each([&](int w) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), j);
        });
    return Graph(static_cast<int>(keep.size()), es);
}

Graph Graph::without(const std::vector<int>& drop) const {
    VertexSet keep = all();
    for (int v : drop) keep.reset(v);
    return induced(keep);
}

bool Graph::is_clique(const std::vector<int>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!adjacent(vs[i], vs[j])) return false;
    return true;
}

bool Graph::is_independent(const std::vector<int>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || adjacent(vs[i], vs[j])) return false;
    return true;
}

std::vector<std::vector<int>> Graph::components(const VertexSet& within) const {
    std::vector<std::vector<int>> out;
    VertexSet left = within;
    for (int s = left.first(); s >= 0; s = left.first()) {
        VertexSet comp(n_);
        VertexSet frontier(n_);
        frontier.set(s);
        while (frontier.any()) {
            comp |= frontier;
            left -= frontier;
            VertexSet nxt(n_);
            frontier.for_each([&](int v) { nxt |= neighbors(v); });
            nxt &= left;
            frontier = std::move(nxt);
        }
        out.push_back(comp.to_vector());
    }
    return out;
}

bool Graph::connected() const { return components().size() <= 1; }

BlockDecomposition blocks(const Graph& g) {
    const int n = g.order();
    BlockDecomposition out;
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
    std::vector<int> vstack;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        int next_nb;  // last neighbor scanned
        int children;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[static_cast<std::size_t>(root)] = timer++;
            out.blocks.push_back({root});
            continue;
        }
        std::vector<Frame> stack;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        vstack.push_back(root);
        stack.push_back({root, -1, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            int w = g.neighbors(f.v).next(f.next_nb);
            if (w >= 0) {
                f.next_nb = w;
                if (w == f.parent) continue;
                if (disc[static_cast<std::size_t>(w)] < 0) {
                    ++f.children;
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    vstack.push_back(w);
                    stack.push_back({w, f.v, -1, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                // the root is a cut vertex iff it has two or more DFS children
                if (done.children >= 2) is_cut[static_cast<std::size_t>(root)] = true;
                break;
            }
            int v = stack.back().v;
            low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(done.v)]);
            if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(v)]) {
                if (stack.back().parent >= 0) is_cut[static_cast<std::size_t>(v)] = true;
                std::vector<int> block;
                while (true) {
                    int x = vstack.back();
                    vstack.pop_back();
                    block.push_back(x);
                    if (x == done.v) break;
                }
                block.push_back(v);
                std::sort(block.begin(), block.end());
                out.blocks.push_back(std::move(block));
            }
        }
        vstack.clear();
    }

    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (int v : out.blocks[b])
            if (is_cut[static_cast<std::size_t>(v)]) out.block_tree.emplace_back(static_cast<int>(b), v);
    return out;
}

Coloring merge_block_colorings(const Graph& g, const BlockDecomposition& decomp,
                               const std::vector<Coloring>& per_block, int k) {
    const int n = g.order();
    if (per_block.size() != decomp.blocks.size())
        throw std::invalid_argument("merge_block_colorings: one coloring per block required");
    Coloring out{k, std::vector<int>(static_cast<std::size_t>(n), 0)};
    std::vector<std::vector<int>> blocks_of(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < decomp.blocks.size(); ++b)
        for (int v : decomp.blocks[b]) blocks_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));

    std::vector<bool> placed(decomp.blocks.size(), false);
    auto place = [&](int b, int anchor) {
        const auto& vs = decomp.blocks[static_cast<std::size_t>(b)];
        const auto& local = per_block[static_cast<std::size_t>(b)];
        // palette permutation: swap the anchor's local color with its global one
        int from = 0, to = 0;
        if (anchor >= 0) {
            auto pos = std::lower_bound(vs.begin(), vs.end(), anchor) - vs.begin();
            from = local[static_cast<int>(pos)];
            to = out.colors[static_cast<std::size_t>(anchor)];
        }
        for (std::size_t i = 0; i < vs.size(); ++i) {
            int c = local[static_cast<int>(i)];
            if (c == from) c = to;
            else if (c == to) c = from;
            out.colors[static_cast<std::size_t>(vs[i])] = c;
        }
        placed[static_cast<std::size_t>(b)] = true;
    };

    for (std::size_t start = 0; start < decomp.blocks.size(); ++start) {
        if (placed[start]) continue;
        place(static_cast<int>(start), -1);
        std::queue<int> q;
        q.push(static_cast<int>(start));
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (int v : decomp.blocks[static_cast<std::size_t>(b)])
                for (int nb : blocks_of[static_cast<std::size_t>(v)]) {
                    if (placed[static_cast<std::size_t>(nb)]) continue;
                    place(nb, v);
                    q.push(nb);
                }
        }
    }
    return out;
}

}  // namespace ptc
