#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ptcolor/detect.hpp"
#include "ptcolor/dimacs.hpp"
#include "ptcolor/gadget.hpp"
#include "ptcolor/graph.hpp"

namespace ptc {

/// Truth value per variable; values[i] belongs to variable i+1.
struct Assignment {
    std::vector<bool> values;

    bool operator()(int var) const { return values[static_cast<std::size_t>(var - 1)]; }
};

bool satisfies(const CnfFormula& f, const Assignment& a);

/// DPLL with unit propagation; nullopt iff unsatisfiable.
std::optional<Assignment> solve_sat(const CnfFormula& f);

enum class Role { X, D, C, U };

/// Role of one vertex of the reduction graph. Variables and clauses are
/// 1-based; fields that do not apply hold 0.
struct VertexRole {
    Role role = Role::U;
    int var = 0;
    int clause = 0;
    /// X: +1 for x_i, -1 for its negation. C: literal slot 1..3.
    int detail = 0;
    /// C and U: the vertex of the gadget this one copies; -1 otherwise.
    int gadget_vertex = -1;
};

struct ReductionLayout {
    std::vector<VertexRole> roles;

    /// Vertex ids: x_i = 2(i-1), its negation 2(i-1)+1, d_i = 2n + i-1,
    /// gadget vertex h of clause j = 3n + (j-1)|V(H)| + h.
    static int literal_vertex(int literal);
    static int d_vertex(int n_vars, int var);
};

struct Reduction {
    Graph graph;
    ReductionLayout layout;
};

/// Builds the reduction graph: a K2 per variable, an anchor per variable,
/// a copy of the gadget per clause whose triple (ascending) is wired to the
/// clause's literals in textual order, and every non-triple gadget vertex
/// joined to all literal and anchor vertices. Throws std::invalid_argument
/// if the gadget fails verification at path bound `t`.
Reduction build_reduction(const CnfFormula& f, const Graph& h, const Triple& triple, int k, int t);

/// Same, trusting an existing certificate.
Reduction build_reduction(const CnfFormula& f, const GadgetCertificate& gadget);

/// Writes `v <id> <X|D|C|U> <var|-> <clause|-> <pos|neg|slot|->` per vertex.
void write_roles(std::ostream& out, const ReductionLayout& layout);

/// The explicit (k+1)-coloring built from a satisfying assignment: anchors
/// and true literals take k+1, false literals k, the first satisfied triple
/// vertex of each clause takes k, and the rest of the clause copy reuses the
/// gadget's stored (k-1)-coloring of H minus that vertex.
Coloring forward_coloring(const CnfFormula& f, const GadgetCertificate& gadget, const Reduction& red,
                          const Assignment& sigma);

struct ReductionReport {
    bool gadget_ok = false;
    std::string gadget_refusal;
    bool satisfiable = false;
    std::optional<Assignment> assignment;
    bool colorable = false;
    std::optional<Coloring> coloring;
    bool equivalence_holds = false;
    bool pt_free = false;
    std::optional<InducedCertificate> path_certificate;
    std::optional<Coloring> forward;
    bool forward_proper = false;
    int vertices = 0;
    int edges = 0;

    /// Every check that applies passed.
    bool ok() const;
};

/// Decides satisfiability and (k+1)-colorability independently, compares
/// them, certifies P_t-freeness of the reduction graph, and when
/// satisfiable checks the explicit forward coloring.
ReductionReport verify_reduction(const CnfFormula& f, const Graph& h, const Triple& triple, int k, int t);
ReductionReport verify_reduction(const CnfFormula& f, const GadgetCertificate& gadget);

}  // namespace ptc
