#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptcolor/graph.hpp"

namespace ptc {

/// Named pattern graphs. Vertex order is significant: it is the order in
/// which certificates list host vertices.
namespace pattern {
Graph path(int t);       ///< P_t: 0-1-...-(t-1)
Graph cycle(int l);      ///< C_l: 0-1-...-(l-1)-0, l >= 3
Graph complete(int k);   ///< K_k
/// Banner: pendant e = 0 attached to a = 1 of the 4-cycle a-b-c-d-a (1-2-3-4-1).
Graph banner();
/// Complement of C_7 with cycle numbering: i ~ j iff |i-j| mod 7 is not 1 or 6.
Graph c7_complement();
}  // namespace pattern

/// Host vertices realizing a pattern; vertices[i] is the image of pattern vertex i.
struct InducedCertificate {
    std::string pattern_name;
    std::vector<int> vertices;
};

/// True iff the listed vertices induce exactly `pattern`'s edges in `host`.
bool validates(const Graph& host, const Graph& pattern, const std::vector<int>& vertices);

/// Lexicographically least embedding of `pattern` as an induced subgraph
/// (pattern vertices assigned in index order, host candidates ascending).
std::optional<InducedCertificate> find_induced(const Graph& host, const Graph& pattern,
                                               std::string name = "pattern");

/// Visits every embedding (one per pattern automorphism) in the same order
/// as find_induced; the visitor returns true to stop.
void for_each_induced(const Graph& host, const Graph& pattern,
                      const std::function<bool(const std::vector<int>&)>& visit);

/// Induced P_t via DFS over induced paths; returns the same certificate as
/// find_induced(host, pattern::path(t)).
std::optional<InducedCertificate> find_induced_path(const Graph& host, int t);

/// Like find_induced_path, but only paths whose vertices all lie in `within`.
std::optional<InducedCertificate> find_induced_path(const Graph& host, int t, const VertexSet& within);

/// Maximum clique size (branch and bound with a greedy-coloring bound).
int clique_number(const Graph& g);
/// A maximum clique, sorted ascending.
std::vector<int> max_clique(const Graph& g);
/// Some k-clique (sorted) or nullopt.
std::optional<InducedCertificate> has_clique(const Graph& g, int k);

enum class GraphClass { P6_banner_free, P6_free, P7_free };

std::string to_string(GraphClass c);
GraphClass parse_graph_class(const std::string& s);

/// nullopt means the graph is in the class; otherwise the first violation
/// (P6 is searched before the banner).
std::optional<InducedCertificate> class_violation(const Graph& g, GraphClass c);

/// Resolves a pattern label (P<t>, C<l>, K<k>, banner, C7bar) to its graph.
/// Throws std::invalid_argument on an unknown label.
Graph pattern_by_name(const std::string& name);

}  // namespace ptc
