#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptcolor/detect.hpp"
#include "ptcolor/graph.hpp"

namespace ptc {

enum class CycleFlavor { C5, C7Complement };

/// Vertices outside a base cycle C bucketed by their neighborhood on C.
/// Cycle positions are indices into `cycle`; for the C7 complement they
/// follow the C7 numbering (v_i, v_{i+1} nonadjacent in G).
struct SClassification {
    CycleFlavor flavor = CycleFlavor::C5;
    std::vector<int> cycle;
    /// Per graph vertex: bit i set iff adjacent to cycle[i]. Zero for cycle vertices.
    std::vector<std::uint8_t> cycle_neighbors;
    /// S_i: vertices off the cycle with exactly i cycle neighbors.
    std::vector<std::vector<int>> by_count;

    /// C5 only, indexed by i (mod 5).
    /// s1[i]: only neighbor v_i. s2[i]: neighbors exactly {v_{i-2}, v_{i+2}}.
    /// s3[i]: neighbors exactly {v_{i-1}, v_i, v_{i+1}}. s4[i]: all but v_i.
    std::array<std::vector<int>, 5> s1, s2, s3, s4;

    /// Off-pattern vertices. C5: 2- or 3-vertices whose cycle neighborhood is
    /// not a P2 / P3. C7 complement: 2-vertices on a pair {v_i, v_{i+1}}.
    std::vector<int> irregular;

    const std::vector<int>& s(int i) const { return by_count[static_cast<std::size_t>(i)]; }
};

/// Exact bucket assignment. Throws std::invalid_argument if `cycle` does not
/// induce the claimed flavor.
SClassification classify_against_cycle(const Graph& g, const std::vector<int>& cycle, CycleFlavor flavor);

struct Decision {
    enum class Kind { Colorable, NotColorable, NotInClass };
    Kind kind = Kind::NotColorable;
    /// Proper 4-coloring when Colorable.
    std::optional<Coloring> coloring;
    /// Short tag for NotColorable / NotInClass.
    std::string reason;
    /// Forbidden induced subgraph when NotInClass.
    std::optional<InducedCertificate> certificate;
    /// Which route decided each block ("trivial", "k5", "c5", "c7bar", "perfect").
    std::vector<std::string> routes;
    /// Pre-colorings of the base set tried across all blocks.
    std::uint64_t precolorings = 0;
};

std::string to_string(Decision::Kind k);

/// Decides 4-colorability of a (P6, banner)-free graph. Class membership is
/// checked first; blocks are decided separately (K5 filter, then an induced
/// C5, then an induced C7 complement, else the exact solver) and their
/// colorings merged.
Decision solve4(const Graph& g);

/// The C7-complement route. `cycle` lists the seven vertices in C7
/// numbering. Expects a connected C5-free graph; throws
/// std::invalid_argument if `cycle` does not induce the C7 complement.
Decision case_c7bar(const Graph& g, const std::vector<int>& cycle);

/// The C5 route over pre-colorings of the cycle together with its 3- and
/// 4-vertices. `cycle` lists the five vertices in cycle order. Throws
/// std::invalid_argument if it does not induce C5.
Decision case_c5(const Graph& g, const std::vector<int>& cycle);

/// Structural facts the C5 and C7-complement routes rely on, checked
/// directly from adjacency on each K5-free block of `g`. Returns one line per
/// violated fact; empty when all hold. With `all_cycles`, every induced C5
/// of a block is audited, not just the one the solver picks.
std::vector<std::string> audit_structure(const Graph& g, bool all_cycles = false);

/// Audits for one base cycle of a 2-connected K5-free graph.
std::vector<std::string> audit_c5_claims(const Graph& g, const SClassification& s);
std::vector<std::string> audit_c7bar_claims(const Graph& g, const SClassification& s);

}  // namespace ptc
