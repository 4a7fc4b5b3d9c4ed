#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptcolor/coloring.hpp"
#include "ptcolor/graph.hpp"

namespace ptc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// DIMACS COL: `p edge <n> <m>`, `e <u> <v>` (1-based), `c ...` comments.
Graph read_dimacs_graph(std::istream& in);
Graph read_dimacs_graph_file(const std::string& path);
/// Edges emitted sorted by (min, max); comment lines are written first.
void write_dimacs_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});

/// Exactly-three-distinct-variable clauses; literals are DIMACS-signed
/// (+v / -v for variable v in 1..n_vars).
struct CnfFormula {
    int n_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

/// Rejects (never repairs) clauses with other than three literals or a
/// repeated variable.
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf_string(const std::string& text);
CnfFormula read_cnf_file(const std::string& path);
void write_cnf(std::ostream& out, const CnfFormula& f);

/// Lists file: lines `<vertex> <c1>[,<c2>,...]`, vertices 1-based; vertices
/// not mentioned get the full palette {1..k}. `#` and `c` lines are comments.
ColorLists read_lists(std::istream& in, int n, int k);

}  // namespace ptc
