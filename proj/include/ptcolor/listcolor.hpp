#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "ptcolor/coloring.hpp"
#include "ptcolor/graph.hpp"

namespace ptc {

/// Repeatedly deletes the color of every singleton-list vertex from its
/// neighbors' lists until nothing changes. Only forced deletions happen.
/// Returns nullopt when some list runs empty.
std::optional<ColorLists> propagate(const Graph& g, ColorLists lists);

/// List coloring when every list has one or two colors, via 2-SAT on an
/// implication graph (Tarjan SCC). Throws std::invalid_argument if a list has
/// three or more colors; an empty list yields nullopt.
std::optional<Coloring> solve_two_lists(const Graph& g, const ColorLists& lists);

/// Search statistics, for benchmarking and tests.
struct ExactStats {
    std::uint64_t nodes = 0;
};

/// Complete backtracking list coloring: propagation at every node,
/// minimum-remaining-values branching (ties to the lowest vertex id, colors
/// tried lowest first). Colors that no list tells apart are interchangeable,
/// so at each node only one not-yet-used color per interchangeable class is
/// tried.
std::optional<Coloring> solve_exact(const Graph& g, const ColorLists& lists, ExactStats* stats = nullptr);

/// solve_exact with every list equal to {1..k}.
std::optional<Coloring> k_coloring(const Graph& g, int k);

/// Smallest k with a k-coloring (0 for the empty graph).
int chromatic_number(const Graph& g);

}  // namespace ptc
