#pragma once

// Compact graphs on at most 11 vertices for the gadget enumerator: one
// 16-bit adjacency row per vertex, canonical forms packed into 64 bits.

#include <array>
#include <cstdint>
#include <vector>

#include "ptcolor/graph.hpp"

namespace ptc::detail {

constexpr int kSmallMax = 11;

struct SmallGraph {
    int n = 0;
    std::array<std::uint16_t, 16> adj{};

    bool adjacent(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1u; }
    std::uint16_t all() const { return static_cast<std::uint16_t>((1u << n) - 1); }

    /// Upper-triangle adjacency bits, pair (0,1) most significant.
    std::uint64_t code() const;
    Graph to_graph() const;
    static SmallGraph from_graph(const Graph& g);
};

/// Canonical relabeling: the labeling maximizing code() among the leaves of
/// an individualization-refinement tree (equitable refinement, twin
/// pruning). Isomorphic inputs yield identical outputs.
SmallGraph canonical_form(const SmallGraph& g);

/// Induced path on t vertices restricted to `within`.
bool has_induced_path(const SmallGraph& g, int t, std::uint16_t within);

/// Clique of size k inside `within`.
bool has_clique(const SmallGraph& g, int k, std::uint16_t within);

}  // namespace ptc::detail
