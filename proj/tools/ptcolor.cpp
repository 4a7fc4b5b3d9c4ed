// ptcolor: command-line front end. Vertex ids in files and in printed JSON
// are 1-based, matching DIMACS.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptcolor/bench.hpp"
#include "ptcolor/corpus.hpp"
#include "ptcolor/detect.hpp"
#include "ptcolor/dimacs.hpp"
#include "ptcolor/gadget.hpp"
#include "ptcolor/listcolor.hpp"
#include "ptcolor/p6banner.hpp"
#include "ptcolor/reduction.hpp"

using nlohmann::json;
using namespace ptc;

namespace {

constexpr int kInputError = 3;

struct Globals {
    std::uint64_t seed = 0;
    int jobs = 1;
    bool compact = false;
};

void print(const Globals& g, const json& j) { std::cout << (g.compact ? j.dump() : j.dump(2)) << '\n'; }

json one_based(const std::vector<int>& vs) {
    json out = json::array();
    for (int v : vs) out.push_back(v + 1);
    return out;
}

json certificate_json(const InducedCertificate& c) { return {{"pattern", c.pattern_name}, {"vertices", one_based(c.vertices)}}; }

json gadget_json(const GadgetCertificate& c) {
    json edges = json::array();
    for (auto [u, v] : c.graph.edges()) edges.push_back({u + 1, v + 1});
    json critical = json::object();
    for (int v = 0; v < c.graph.order(); ++v) {
        json colors = json::array();
        for (int w = 0; w < c.graph.order(); ++w)
            if (w != v) colors.push_back(c.critical_colorings[static_cast<std::size_t>(v)][w]);
        critical[std::to_string(v + 1)] = colors;
    }
    return {{"certified", true},
            {"k", c.k},
            {"t", c.t},
            {"n", c.graph.order()},
            {"edges", edges},
            {"triple", one_based({c.triple.begin(), c.triple.end()})},
            {"no_smaller_coloring", c.no_smaller_coloring},
            {"k_coloring", c.k_coloring.colors},
            {"critical_colorings", critical},
            {"omega_witness", one_based(c.omega_witness)}};
}

Triple parse_triple(const std::string& text) {
    Triple t{};
    std::stringstream in(text);
    std::string item;
    int i = 0;
    while (std::getline(in, item, ',')) {
        if (i == 3) throw std::invalid_argument("triple needs exactly three vertices");
        t[static_cast<std::size_t>(i++)] = std::stoi(item) - 1;
    }
    if (i != 3) throw std::invalid_argument("triple needs exactly three vertices");
    return t;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"4-coloring of (P6, banner)-free graphs and SAT-to-coloring reductions"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals glob;
    app.add_option("--seed", glob.seed, "Seed for generated instances");
    app.add_option("--jobs", glob.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--json", glob.compact, "Print JSON on one line");

    // detect
    auto* detect = app.add_subcommand("detect", "Find an induced copy of a pattern");
    std::string pattern_name, graph_path;
    detect->add_option("--pattern", pattern_name, "P<t>, C<l>, K<k>, banner or C7bar")->required();
    detect->add_option("--graph", graph_path, "DIMACS graph")->required();

    // gadget
    auto* gadget = app.add_subcommand("gadget", "Nice k-critical gadgets");
    gadget->require_subcommand(1);
    auto* gfind = gadget->add_subcommand("find", "Smallest gadget by exhaustive search");
    int k = 0, t = 0, nmax = 10;
    gfind->add_option("--k", k)->required();
    gfind->add_option("--t", t)->required();
    gfind->add_option("--nmax", nmax)->check(CLI::Range(1, 10));
    auto* gverify = gadget->add_subcommand("verify", "Check a candidate gadget");
    std::string triple_text;
    gverify->add_option("--graph", graph_path)->required();
    gverify->add_option("--k", k)->required();
    gverify->add_option("--triple", triple_text, "a,b,c (1-based)")->required();
    gverify->add_option("--t", t)->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Compile a 3-CNF into a coloring instance");
    std::string cnf_path, gadget_name = "C7", out_path, roles_path;
    bool verify = false;
    reduce->add_option("--cnf", cnf_path)->required();
    reduce->add_option("--gadget", gadget_name, "C7, H1 or a DIMACS gadget file");
    reduce->add_option("--k", k, "Gadget level (defaults: 3 for C7, 4 for H1)");
    reduce->add_option("--t", t, "Path bound for a gadget file (default 7 if k = 3, else 6)");
    reduce->add_option("--triple", triple_text, "Triple for a gadget file, a,b,c (1-based)");
    reduce->add_option("--out", out_path, "DIMACS output");
    reduce->add_option("--roles", roles_path, "Role sidecar output");
    reduce->add_flag("--verify", verify, "Check satisfiability against colorability and path-freeness");

    // solve
    auto* solve = app.add_subcommand("solve", "Decide 4-colorability of a (P6, banner)-free graph");
    std::string witness_path;
    solve->add_option("--graph", graph_path)->required();
    solve->add_option("--emit-witness", witness_path, "Write the verdict JSON here as well");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exact (list) coloring");
    std::string lists_path;
    oracle->add_option("--graph", graph_path)->required();
    oracle->add_option("--k", k)->required()->check(CLI::Range(1, 31));
    oracle->add_option("--lists", lists_path, "Lines `<vertex> c1,c2,...`");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a (P6, banner)-free corpus");
    int n = 14, count = 10;
    std::string out_dir;
    gen->add_option("--n", n)->check(CLI::Range(1, 20));
    gen->add_option("--count", count)->check(CLI::NonNegativeNumber);
    gen->add_option("--out-dir", out_dir, "Write corpus_<id>.col files here");

    // bench
    auto* bench = app.add_subcommand("bench", "Run an acceptance suite and report");
    BenchOptions bopt;
    bench->add_option("--suite", bopt.suite, "reduction, solver or detect")->required();
    bench->add_option("--count", bopt.count);
    bench->add_option("--n", bopt.n)->check(CLI::Range(1, 20));
    bench->add_option("--out", out_path, "Write the report here instead of stdout");
    bench->add_option("--witness-dir", bopt.witness_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (detect->parsed()) {
            Graph g = read_dimacs_graph_file(graph_path);
            auto cert = find_induced(g, pattern_by_name(pattern_name), pattern_name);
            print(glob, {{"found", cert.has_value()}, {"vertices", cert ? one_based(cert->vertices) : json::array()}});
            return 0;
        }
        if (gfind->parsed()) {
            GadgetSearchStats stats;
            auto cert = find_nice_critical(k, t, nmax, &stats);
            json j = cert ? gadget_json(*cert) : json{{"certified", false}, {"refusal", "no gadget with at most " + std::to_string(nmax) + " vertices"}};
            j["graphs_per_order"] = stats.graphs_per_order;
            j["candidates_checked"] = stats.candidates_checked;
            print(glob, j);
            return cert ? 0 : 1;
        }
        if (gverify->parsed()) {
            auto check = check_nice_critical(read_dimacs_graph_file(graph_path), k, parse_triple(triple_text), t);
            print(glob, check.certificate ? gadget_json(*check.certificate) : json{{"certified", false}, {"refusal", check.refusal}});
            return check.certificate ? 0 : 1;
        }
        if (reduce->parsed()) {
            CnfFormula f = read_cnf_file(cnf_path);
            GadgetCertificate cert;
            if (gadget_name == "C7" || gadget_name == "H1") {
                cert = gadget_name == "C7" ? gadgets::c7() : gadgets::h1_prime();
                if (k != 0 && k != cert.k)
                    throw std::invalid_argument("gadget " + gadget_name + " has level " + std::to_string(cert.k));
            } else {
                if (k == 0 || triple_text.empty()) throw std::invalid_argument("a gadget file needs --k and --triple");
                if (t == 0) t = k == 3 ? 7 : 6;
                auto check = check_nice_critical(read_dimacs_graph_file(gadget_name), k, parse_triple(triple_text), t);
                if (!check.certificate) throw std::invalid_argument("gadget rejected: " + check.refusal);
                cert = *check.certificate;
            }
            Reduction red = build_reduction(f, cert);
            std::ostringstream col, roles;
            write_dimacs_graph(col, red.graph, {"reduction of " + std::filesystem::path(cnf_path).filename().string() +
                                                    " with gadget " + gadget_name});
            write_roles(roles, red.layout);
            if (!out_path.empty()) write_text(out_path, col.str());
            if (!roles_path.empty()) write_text(roles_path, roles.str());
            json j{{"vertices", red.graph.order()}, {"edges", red.graph.size()}, {"k", cert.k}, {"t", cert.t}};
            int status = 0;
            if (verify) {
                ReductionReport r = verify_reduction(f, cert);
                j["satisfiable"] = r.satisfiable;
                j["colorable"] = r.colorable;
                j["equivalence_holds"] = r.equivalence_holds;
                j["path_free"] = r.pt_free;
                if (r.path_certificate) j["path_certificate"] = certificate_json(*r.path_certificate);
                if (r.satisfiable) j["forward_proper"] = r.forward_proper;
                j["ok"] = r.ok();
                status = r.ok() ? 0 : 1;
            }
            print(glob, j);
            return status;
        }
        if (solve->parsed()) {
            Decision d = solve4(read_dimacs_graph_file(graph_path));
            json j{{"verdict", to_string(d.kind)},
                   {"witness", d.coloring ? json(d.coloring->colors) : json::array()},
                   {"certificate", d.certificate ? one_based(d.certificate->vertices) : json::array()},
                   {"reason", d.reason},
                   {"routes", d.routes}};
            if (d.certificate) j["pattern"] = d.certificate->pattern_name;
            if (!witness_path.empty()) write_text(witness_path, j.dump(2) + "\n");
            print(glob, j);
            switch (d.kind) {
                case Decision::Kind::Colorable: return 0;
                case Decision::Kind::NotColorable: return 1;
                case Decision::Kind::NotInClass: return 2;
            }
        }
        if (oracle->parsed()) {
            Graph g = read_dimacs_graph_file(graph_path);
            ColorLists lists = ColorLists::full(g.order(), k);
            if (!lists_path.empty()) {
                std::ifstream in(lists_path);
                if (!in) throw std::runtime_error("cannot open " + lists_path);
                lists = read_lists(in, g.order(), k);
            }
            auto c = solve_exact(g, lists);
            print(glob, {{"colorable", c.has_value()}, {"coloring", c ? json(c->colors) : json::array()}});
            return c ? 0 : 1;
        }
        if (gen->parsed()) {
            auto corpus = gen_corpus(n, count, glob.seed);
            if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
            json items = json::array();
            for (const auto& e : corpus) {
                json item{{"id", e.id}, {"kind", e.kind}, {"vertices", e.graph.order()}, {"edges", e.graph.size()}};
                if (!out_dir.empty()) {
                    const std::string name = "corpus_" + std::to_string(e.id) + ".col";
                    std::ostringstream col;
                    write_dimacs_graph(col, e.graph, {"seed " + std::to_string(glob.seed) + " id " + std::to_string(e.id) + " " + e.kind});
                    write_text((std::filesystem::path(out_dir) / name).string(), col.str());
                    item["file"] = name;
                }
                items.push_back(item);
            }
            print(glob, {{"seed", glob.seed}, {"n", n}, {"graphs", items}});
            return 0;
        }
        if (bench->parsed()) {
            bopt.seed = glob.seed;
            bopt.jobs = glob.jobs;
            bopt.command.assign(argv, argv + argc);
            bopt.command[0] = "ptcolor";
            json report = run_bench(bopt);
            if (!out_path.empty()) write_text(out_path, report.dump(2) + "\n");
            else print(glob, report);
            return report["passed"].get<bool>() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "ptcolor: " << e.what() << '\n';
        return kInputError;
    }
    return 0;
}
