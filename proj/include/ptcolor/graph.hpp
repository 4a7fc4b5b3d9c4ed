#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ptcolor/coloring.hpp"
#include "ptcolor/vertex_set.hpp"

namespace ptc {

using Edge = std::pair<int, int>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as bit rows.
class Graph {
public:
    Graph() = default;
    /// Throws GraphError on an out-of-range endpoint or a self-loop.
    /// Duplicate pairs collapse to one edge.
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int size() const { return m_; }
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbors(v).count(); }
    VertexSet all() const { return VertexSet::full(n_); }

    /// Edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    Graph complement() const;

    /// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in ascending
    /// order of the original ids; `keep` must be sorted ascending.
    Graph induced(const std::vector<int>& keep) const;
    Graph induced(const VertexSet& keep) const { return induced(keep.to_vector()); }
    /// Graph minus the vertices in `drop`; remaining vertices keep their
    /// relative order.
    Graph without(const std::vector<int>& drop) const;

    bool is_clique(const std::vector<int>& vs) const;
    bool is_independent(const std::vector<int>& vs) const;

    /// Vertex sets of connected components of G[within], each sorted, ordered by least vertex.
    std::vector<std::vector<int>> components(const VertexSet& within) const;
    std::vector<std::vector<int>> components() const { return components(all()); }
    bool connected() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> rows_;
};

/// Maximal 2-connected pieces, bridges and isolated vertices of a graph.
struct BlockDecomposition {
    /// Each block as a sorted vertex list; blocks ordered by discovery.
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;
    /// Incidences (block index, cut vertex) of the block-cut tree.
    std::vector<std::pair<int, int>> block_tree;
};

/// DFS lowpoint decomposition (iterative, so deep graphs do not overflow
/// the stack).
BlockDecomposition blocks(const Graph& g);

/// Stitches per-block colorings (indexed by position in each block's vertex
/// list) into one coloring of `g` by permuting each block's palette to agree
/// with its parent at the shared cut vertex.
Coloring merge_block_colorings(const Graph& g, const BlockDecomposition& decomp,
                               const std::vector<Coloring>& per_block, int k);

}  // namespace ptc
