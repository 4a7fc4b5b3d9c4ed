#include "ptcolor/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "ptcolor/listcolor.hpp"

namespace ptc {

bool satisfies(const CnfFormula& f, const Assignment& a) {
    if (static_cast<int>(a.values.size()) != f.n_vars) return false;
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (int lit : cl) sat = sat || (a(std::abs(lit)) == (lit > 0));
        if (!sat) return false;
    }
    return true;
}

namespace {

class Dpll {
public:
    explicit Dpll(const CnfFormula& f) : f_(f), value_(static_cast<std::size_t>(f.n_vars) + 1, 0) {}

    std::optional<Assignment> run() {
        if (!search()) return std::nullopt;
        Assignment a;
        for (int v = 1; v <= f_.n_vars; ++v) a.values.push_back(value_[static_cast<std::size_t>(v)] >= 0);
        return a;
    }

private:
    int lit_value(int lit) const {
        int v = value_[static_cast<std::size_t>(std::abs(lit))];
        return lit > 0 ? v : -v;
    }

    // false on conflict
    bool unit_propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& cl : f_.clauses) {
                int unassigned = 0, last = 0;
                bool sat = false;
                for (int lit : cl) {
                    int lv = lit_value(lit);
                    if (lv > 0) sat = true;
                    else if (lv == 0) ++unassigned, last = lit;
                }
                if (sat) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    value_[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
                    trail.push_back(std::abs(last));
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search() {
        std::vector<int> trail;
        if (unit_propagate(trail)) {
            int var = 0;
            for (int v = 1; v <= f_.n_vars && !var; ++v)
                if (value_[static_cast<std::size_t>(v)] == 0) var = v;
            if (!var) return true;
            for (int val : {1, -1}) {
                value_[static_cast<std::size_t>(var)] = val;
                if (search()) return true;
            }
            value_[static_cast<std::size_t>(var)] = 0;
        }
        for (int v : trail) value_[static_cast<std::size_t>(v)] = 0;
        return false;
    }

    const CnfFormula& f_;
    std::vector<int> value_;
};

Triple sorted_triple(Triple t) {
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

std::optional<Assignment> solve_sat(const CnfFormula& f) { return Dpll(f).run(); }

int ReductionLayout::literal_vertex(int literal) {
    int var = std::abs(literal);
    return 2 * (var - 1) + (literal > 0 ? 0 : 1);
}

int ReductionLayout::d_vertex(int n_vars, int var) { return 2 * n_vars + var - 1; }

Reduction build_reduction(const CnfFormula& f, const GadgetCertificate& gadget) {
    const int n = f.n_vars;
    const int m = static_cast<int>(f.clauses.size());
    const Graph& h = gadget.graph;
    const int hn = h.order();
    const Triple triple = sorted_triple(gadget.triple);
    const int total = 3 * n + m * hn;

    std::vector<Edge> edges;
    ReductionLayout layout;
    layout.roles.resize(static_cast<std::size_t>(total));
    for (int i = 1; i <= n; ++i) {
        int x = ReductionLayout::literal_vertex(i), nx = ReductionLayout::literal_vertex(-i);
        edges.emplace_back(x, nx);
        layout.roles[static_cast<std::size_t>(x)] = {Role::X, i, 0, +1, -1};
        layout.roles[static_cast<std::size_t>(nx)] = {Role::X, i, 0, -1, -1};
        layout.roles[static_cast<std::size_t>(ReductionLayout::d_vertex(n, i))] = {Role::D, i, 0, 0, -1};
    }
    for (int j = 1; j <= m; ++j) {
        const auto& clause = f.clauses[static_cast<std::size_t>(j - 1)];
        const int base = 3 * n + (j - 1) * hn;
        for (auto [a, b] : h.edges()) edges.emplace_back(base + a, base + b);
        for (int g = 0; g < hn; ++g) {
            auto slot = std::find(triple.begin(), triple.end(), g) - triple.begin();
            const int v = base + g;
            if (slot < 3) {
                int lit = clause[static_cast<std::size_t>(slot)];
                int var = std::abs(lit);
                layout.roles[static_cast<std::size_t>(v)] = {Role::C, var, j, static_cast<int>(slot) + 1, g};
                edges.emplace_back(v, ReductionLayout::d_vertex(n, var));
                edges.emplace_back(v, ReductionLayout::literal_vertex(lit));
            } else {
                layout.roles[static_cast<std::size_t>(v)] = {Role::U, 0, j, 0, g};
                for (int w = 0; w < 3 * n; ++w) edges.emplace_back(v, w);
            }
        }
    }
    return {Graph(total, edges), std::move(layout)};
}

Reduction build_reduction(const CnfFormula& f, const Graph& h, const Triple& triple, int k, int t) {
    auto check = check_nice_critical(h, k, triple, t);
    if (!check.certificate) throw std::invalid_argument("gadget rejected: " + check.refusal);
    return build_reduction(f, *check.certificate);
}

void write_roles(std::ostream& out, const ReductionLayout& layout) {
    auto field = [](int x) { return x > 0 ? std::to_string(x) : std::string("-"); };
    for (std::size_t v = 0; v < layout.roles.size(); ++v) {
        const auto& r = layout.roles[v];
        out << "v " << v + 1 << ' ';
        switch (r.role) {
            case Role::X: out << "X " << r.var << " - " << (r.detail > 0 ? "pos" : "neg"); break;
            case Role::D: out << "D " << r.var << " - -"; break;
            case Role::C: out << "C " << r.var << ' ' << r.clause << ' ' << r.detail; break;
            case Role::U: out << "U - " << field(r.clause) << " -"; break;
        }
        out << '\n';
    }
}

Coloring forward_coloring(const CnfFormula& f, const GadgetCertificate& gadget, const Reduction& red,
                          const Assignment& sigma) {
    const int n = f.n_vars;
    const int k = gadget.k;
    const int hn = gadget.graph.order();
    const Triple triple = sorted_triple(gadget.triple);
    Coloring phi{k + 1, std::vector<int>(static_cast<std::size_t>(red.graph.order()), 0)};
    for (int i = 1; i <= n; ++i) {
        phi.colors[static_cast<std::size_t>(ReductionLayout::d_vertex(n, i))] = k + 1;
        phi.colors[static_cast<std::size_t>(ReductionLayout::literal_vertex(i))] = sigma(i) ? k + 1 : k;
        phi.colors[static_cast<std::size_t>(ReductionLayout::literal_vertex(-i))] = sigma(i) ? k : k + 1;
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto& clause = f.clauses[j];
        int slot = 0;
        while (slot < 3 && sigma(std::abs(clause[static_cast<std::size_t>(slot)])) != (clause[static_cast<std::size_t>(slot)] > 0)) ++slot;
        if (slot == 3) throw std::invalid_argument("forward_coloring: assignment does not satisfy clause " + std::to_string(j + 1));
        const int c = triple[static_cast<std::size_t>(slot)];
        const Coloring& rest = gadget.critical_colorings[static_cast<std::size_t>(c)];
        const int base = 3 * n + static_cast<int>(j) * hn;
        for (int g = 0; g < hn; ++g) phi.colors[static_cast<std::size_t>(base + g)] = g == c ? k : rest[g];
    }
    return phi;
}

bool ReductionReport::ok() const {
    return gadget_ok && equivalence_holds && pt_free && (!satisfiable || forward_proper);
}

ReductionReport verify_reduction(const CnfFormula& f, const GadgetCertificate& gadget) {
    ReductionReport r;
    r.gadget_ok = true;
    Reduction red = build_reduction(f, gadget);
    r.vertices = red.graph.order();
    r.edges = red.graph.size();
    r.assignment = solve_sat(f);
    r.satisfiable = r.assignment.has_value();
    r.coloring = k_coloring(red.graph, gadget.k + 1);
    r.colorable = r.coloring.has_value();
    r.equivalence_holds = r.satisfiable == r.colorable;
    r.path_certificate = find_induced_path(red.graph, gadget.t);
    r.pt_free = !r.path_certificate.has_value();
    if (r.assignment) {
        r.forward = forward_coloring(f, gadget, red, *r.assignment);
        r.forward_proper = is_proper(red.graph, *r.forward);
    }
    return r;
}

ReductionReport verify_reduction(const CnfFormula& f, const Graph& h, const Triple& triple, int k, int t) {
    auto check = check_nice_critical(h, k, triple, t);
    if (!check.certificate) {
        ReductionReport r;
        r.gadget_refusal = check.refusal;
        return r;
    }
    return verify_reduction(f, *check.certificate);
}

}  // namespace ptc
