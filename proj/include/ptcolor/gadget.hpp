#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptcolor/coloring.hpp"
#include "ptcolor/graph.hpp"

namespace ptc {

using Triple = std::array<int, 3>;

/// Proof bundle that (graph, triple) is a nice k-critical P_t-free graph.
struct GadgetCertificate {
    Graph graph;
    int k = 0;
    int t = 0;
    Triple triple{};
    /// The exact solver found no (k-1)-coloring of the graph.
    bool no_smaller_coloring = false;
    /// A k-coloring of the graph.
    Coloring k_coloring;
    /// critical_colorings[v]: a (k-1)-coloring of graph - v, indexed by the
    /// original vertex ids; entry v itself holds 0.
    std::vector<Coloring> critical_colorings;
    /// A (k-1)-clique avoiding the triple.
    std::vector<int> omega_witness;
};

struct GadgetCheck {
    std::optional<GadgetCertificate> certificate;
    /// Why the candidate was refused (empty on success).
    std::string refusal;
};

/// Full check with a refusal reason. Throws std::invalid_argument when a
/// triple vertex is out of range or k < 3.
GadgetCheck check_nice_critical(const Graph& h, int k, const Triple& triple, int t);

inline std::optional<GadgetCertificate> verify_nice_critical(const Graph& h, int k, const Triple& triple, int t) {
    return check_nice_critical(h, k, triple, t).certificate;
}

/// Re-validates every witness stored in a certificate against its graph.
bool certificate_consistent(const GadgetCertificate& cert);

struct GadgetSearchStats {
    /// Connected K_k-free P_t-free graphs kept per order (index = order).
    std::vector<std::uint64_t> graphs_per_order;
    std::uint64_t candidates_checked = 0;
};

/// Smallest-order nice k-critical P_t-free graph on at most n_max vertices,
/// found by vertex-by-vertex canonical augmentation of connected K_k-free
/// P_t-free graphs. Among gadgets of that order the lexicographically least
/// canonical form wins; the graph is returned in canonical labeling with its
/// least valid triple. Throws std::invalid_argument if n_max > 10.
std::optional<GadgetCertificate> find_nice_critical(int k, int t, int n_max, GadgetSearchStats* stats = nullptr);

namespace gadgets {
/// The 7-cycle with triple {0,2,4}: nice 3-critical and P7-free.
GadgetCertificate c7();
/// A P6-free nice 4-critical graph derived by find_nice_critical(4, 6, 10).
Graph h1_prime_graph();
Triple h1_prime_triple();
GadgetCertificate h1_prime();
}  // namespace gadgets

}  // namespace ptc
