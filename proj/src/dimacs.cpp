#include "ptcolor/dimacs.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ptc {

namespace {

bool blank_or_comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == 'c' || line[pos] == '%';
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Graph read_dimacs_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string fmt;
            long long nn = -1, mm = -1;
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            if (!(ls >> fmt >> nn >> mm) || (fmt != "edge" && fmt != "col") || nn < 0 || mm < 0)
                throw ParseError(lineno, "malformed problem line, expected 'p edge <n> <m>'");
            n = static_cast<int>(nn);
            edges.reserve(static_cast<std::size_t>(mm));
        } else if (tag == "e") {
            if (n < 0) throw ParseError(lineno, "edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n) throw ParseError(lineno, "edge endpoint out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError(lineno, "unexpected line tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing problem line");
    return Graph(n, edges);
}

Graph read_dimacs_graph_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_dimacs_graph(in);
}

void write_dimacs_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

CnfFormula parse_cnf(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long declared = -1;
    CnfFormula f;
    f.n_vars = -1;
    std::vector<int> pending;
    int pending_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] == 'p') {
            std::string p, fmt;
            long long nv = -1;
            if (f.n_vars >= 0) throw ParseError(lineno, "duplicate problem line");
            if (!(ls >> p >> fmt >> nv >> declared) || fmt != "cnf" || nv < 0 || declared < 0)
                throw ParseError(lineno, "malformed header, expected 'p cnf <n> <m>'");
            f.n_vars = static_cast<int>(nv);
            continue;
        }
        if (f.n_vars < 0) throw ParseError(lineno, "clause before header");
        std::string tok;
        while (ls >> tok) {
            char* end = nullptr;
            long lit = std::strtol(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0') throw ParseError(lineno, "malformed literal '" + tok + "'");
            if (lit == 0) {
                if (pending.size() != 3)
                    throw ParseError(pending_line ? pending_line : lineno,
                                     "clause size " + std::to_string(pending.size()) + ", expected 3");
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j)
                        if (std::abs(pending[static_cast<std::size_t>(i)]) == std::abs(pending[static_cast<std::size_t>(j)]))
                            throw ParseError(pending_line, "repeated variable " + std::to_string(std::abs(pending[static_cast<std::size_t>(i)])) + " in clause");
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                pending_line = 0;
                continue;
            }
            if (std::labs(lit) > f.n_vars) throw ParseError(lineno, "literal " + tok + " exceeds variable count");
            if (pending.empty()) pending_line = lineno;
            pending.push_back(static_cast<int>(lit));
        }
    }
    if (f.n_vars < 0) throw ParseError(lineno, "missing header");
    if (!pending.empty()) throw ParseError(pending_line, "unterminated clause");
    if (static_cast<long long>(f.clauses.size()) != declared)
        throw ParseError(lineno, "header declares " + std::to_string(declared) + " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

CnfFormula parse_cnf_string(const std::string& text) {
    std::istringstream in(text);
    return parse_cnf(in);
}

CnfFormula read_cnf_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_cnf(in);
}

void write_cnf(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
}

ColorLists read_lists(std::istream& in, int n, int k) {
    ColorLists lists = ColorLists::full(n, k);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#' || line[pos] == 'c') continue;
        std::istringstream ls(line);
        long long v = 0;
        std::string colors;
        if (!(ls >> v >> colors)) throw ParseError(lineno, "expected '<vertex> <c1>[,<c2>,...]'");
        if (v < 1 || v > n) throw ParseError(lineno, "vertex out of range");
        ColorMask mask = 0;
        std::istringstream cs(colors);
        std::string item;
        while (std::getline(cs, item, ',')) {
            char* end = nullptr;
            long c = std::strtol(item.c_str(), &end, 10);
            if (end == item.c_str() || *end != '\0' || c < 1 || c > k)
                throw ParseError(lineno, "color '" + item + "' outside 1.." + std::to_string(k));
            mask |= color_bit(static_cast<int>(c));
        }
        lists.lists[static_cast<std::size_t>(v - 1)] = mask;
    }
    return lists;
}

}  // namespace ptc
