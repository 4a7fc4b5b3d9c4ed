#include "ptcolor/bench.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ptcolor/corpus.hpp"
#include "ptcolor/listcolor.hpp"
#include "ptcolor/p6banner.hpp"
#include "ptcolor/reduction.hpp"

namespace ptc {

using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Fills out[i] = work(i) on `jobs` threads.
template <class Fn>
std::vector<json> parallel_map(int count, int jobs, Fn work) {
    std::vector<json> out(static_cast<std::size_t>(count));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (int i; (i = next++) < count;) {
            try {
                out[static_cast<std::size_t>(i)] = work(i);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

json edges_json(const Graph& g) {
    json es = json::array();
    for (auto [u, v] : g.edges()) es.push_back({u, v});
    return es;
}

// All eight sign patterns on three distinct variables of n, clauses shuffled.
CnfFormula all_sign_patterns(int n, InstanceRng& rng) {
    std::vector<int> vars(static_cast<std::size_t>(n));
    std::iota(vars.begin(), vars.end(), 1);
    for (std::size_t i = vars.size() - 1; i > 0; --i)
        std::swap(vars[i], vars[static_cast<std::size_t>(rng.below(static_cast<int>(i) + 1))]);
    CnfFormula f{n, {}};
    for (int s = 0; s < 8; ++s)
        f.clauses.push_back({s & 1 ? vars[0] : -vars[0], s & 2 ? vars[1] : -vars[1], s & 4 ? vars[2] : -vars[2]});
    for (std::size_t i = 7; i > 0; --i) std::swap(f.clauses[i], f.clauses[static_cast<std::size_t>(rng.below(static_cast<int>(i) + 1))]);
    return f;
}

// Even ids use C7 (k = 3, n in 3..5, m in 1..8); odd ids use H1' (k = 4,
// n in 3..4, m in 1..4). Id 0 is x1, x2, x3 under all eight sign patterns;
// other multiples of 10 are the same shape on a random triple.
json reduction_suite(const BenchOptions& opt, int count, json& summary) {
    const GadgetCertificate c7 = gadgets::c7();
    const GadgetCertificate h1 = gadgets::h1_prime();
    auto results = parallel_map(count, opt.jobs, [&](int id) {
        InstanceRng rng(opt.seed, static_cast<std::uint64_t>(id));
        const bool use_c7 = id % 2 == 0;
        CnfFormula f;
        if (id == 0) {
            f = CnfFormula{3, {}};
            for (int s = 0; s < 8; ++s) f.clauses.push_back({s & 1 ? 1 : -1, s & 2 ? 2 : -2, s & 4 ? 3 : -3});
        } else if (id % 10 == 0) {
            f = all_sign_patterns(3 + rng.below(3), rng);
        } else if (use_c7) {
            const int n = 3 + rng.below(3);
            f = random_cnf(n, 1 + rng.below(8), rng);
        } else {
            const int n = 3 + rng.below(2);
            f = random_cnf(n, 1 + rng.below(4), rng);
        }
        const auto t0 = std::chrono::steady_clock::now();
        ReductionReport r = verify_reduction(f, use_c7 ? c7 : h1);
        json clauses = json::array();
        for (const auto& cl : f.clauses) clauses.push_back({cl[0], cl[1], cl[2]});
        return json{{"id", id},
                    {"gadget", use_c7 ? "C7" : "H1"},
                    {"n_vars", f.n_vars},
                    {"clauses", clauses},
                    {"vertices", r.vertices},
                    {"edges", r.edges},
                    {"satisfiable", r.satisfiable},
                    {"colorable", r.colorable},
                    {"agree", r.equivalence_holds},
                    {"path_free", r.pt_free},
                    {"forward_proper", r.satisfiable ? json(r.forward_proper) : json(nullptr)},
                    {"ok", r.ok()},
                    {"time_ms", ms_since(t0)}};
    });
    int agree = 0, free = 0, ok = 0, sat = 0;
    for (const auto& r : results) {
        agree += r["agree"].get<bool>();
        free += r["path_free"].get<bool>();
        ok += r["ok"].get<bool>();
        sat += r["satisfiable"].get<bool>();
    }
    summary = {{"instances", count}, {"satisfiable", sat}, {"sat_colorable_agreement", agree},
               {"path_free", free}, {"passed_instances", ok}};
    return results;
}

json solver_suite(const BenchOptions& opt, int count, json& summary) {
    const auto corpus = gen_corpus(opt.n, count, opt.seed);
    if (!opt.witness_dir.empty()) std::filesystem::create_directories(opt.witness_dir);
    auto results = parallel_map(count, opt.jobs, [&](int id) {
        const CorpusEntry& e = corpus[static_cast<std::size_t>(id)];
        const auto t0 = std::chrono::steady_clock::now();
        Decision d = solve4(e.graph);
        const double solve_ms = ms_since(t0);
        const bool oracle = k_coloring(e.graph, 4).has_value();
        const bool proper = !d.coloring || is_proper(e.graph, *d.coloring);
        const bool agree = d.kind != Decision::Kind::NotInClass && (d.kind == Decision::Kind::Colorable) == oracle;
        json r{{"id", id},
               {"kind", e.kind},
               {"vertices", e.graph.order()},
               {"edges", e.graph.size()},
               {"verdict", to_string(d.kind)},
               {"oracle_colorable", oracle},
               {"agree", agree},
               {"witness_proper", proper},
               {"routes", d.routes},
               {"precolorings", d.precolorings},
               {"audit", audit_structure(e.graph)},
               {"time_ms", solve_ms}};
        if (!opt.witness_dir.empty()) {
            const std::string name = "solver_" + std::to_string(id) + ".json";
            json w{{"n", e.graph.order()},
                   {"edges", edges_json(e.graph)},
                   {"verdict", to_string(d.kind)},
                   {"coloring", d.coloring ? json(d.coloring->colors) : json(nullptr)}};
            std::ofstream(std::filesystem::path(opt.witness_dir) / name) << w.dump() << '\n';
            r["witness"] = name;
        }
        return r;
    });
    int agree = 0, proper = 0, audited = 0, colorable = 0;
    json routes = json::object();
    for (const auto& r : results) {
        agree += r["agree"].get<bool>();
        proper += r["witness_proper"].get<bool>();
        audited += r["audit"].empty();
        colorable += r["verdict"] == "colorable";
        for (const auto& route : r["routes"]) routes[route.get<std::string>()] = routes.value(route.get<std::string>(), 0) + 1;
    }
    summary = {{"instances", count}, {"colorable", colorable}, {"oracle_agreement", agree},
               {"witness_proper", proper}, {"audit_clean", audited}, {"block_routes", routes}};
    return results;
}

json detect_suite(const BenchOptions& opt, int count, json& summary) {
    const auto corpus = gen_corpus(opt.n, count, opt.seed);
    static const std::vector<std::string> names = {"P4", "P5", "P6", "C4", "C5", "K4", "banner", "C7bar"};
    auto results = parallel_map(count, opt.jobs, [&](int id) {
        const Graph& g = corpus[static_cast<std::size_t>(id)].graph;
        const auto t0 = std::chrono::steady_clock::now();
        json found = json::object();
        bool consistent = !class_violation(g, GraphClass::P6_banner_free).has_value();
        for (const auto& name : names) {
            auto cert = find_induced(g, pattern_by_name(name), name);
            if (cert && !validates(g, pattern_by_name(name), cert->vertices)) consistent = false;
            if (name[0] == 'P') {
                auto path = find_induced_path(g, std::stoi(name.substr(1)));
                if (path.has_value() != cert.has_value() || (path && path->vertices != cert->vertices)) consistent = false;
            }
            found[name] = cert ? json(cert->vertices) : json(nullptr);
        }
        return json{{"id", id}, {"vertices", g.order()}, {"found", found}, {"consistent", consistent}, {"time_ms", ms_since(t0)}};
    });
    int consistent = 0;
    json hits = json::object();
    for (const auto& r : results) {
        consistent += r["consistent"].get<bool>();
        for (const auto& name : names) hits[name] = hits.value(name, 0) + (r["found"][name].is_null() ? 0 : 1);
    }
    summary = {{"instances", count}, {"consistent", consistent}, {"pattern_hits", hits}};
    return results;
}

}  // namespace

json run_bench(const BenchOptions& opt) {
    int count = opt.count;
    json summary;
    json results;
    const auto t0 = std::chrono::steady_clock::now();
    bool passed = false;
    if (opt.suite == "reduction") {
        if (count <= 0) count = 200;
        results = reduction_suite(opt, count, summary);
        passed = summary["passed_instances"] == count;
    } else if (opt.suite == "solver") {
        if (count <= 0) count = 500;
        results = solver_suite(opt, count, summary);
        passed = summary["oracle_agreement"] == count && summary["witness_proper"] == count && summary["audit_clean"] == count;
    } else if (opt.suite == "detect") {
        if (count <= 0) count = 300;
        results = detect_suite(opt, count, summary);
        passed = summary["consistent"] == count;
    } else {
        throw std::invalid_argument("unknown bench suite: " + opt.suite + " (expected reduction, solver or detect)");
    }
    const double total = ms_since(t0);
    summary["time_ms"] = {{"total", total}, {"mean", count ? total / count : 0.0}};
    return json{{"command", opt.command},
                {"suite", opt.suite},
                {"seed", opt.seed},
                {"count", count},
                {"n", opt.n},
                {"results", results},
                {"summary", summary},
                {"passed", passed}};
}

json without_timings(const json& report) {
    if (report.is_object()) {
        json out = json::object();
        for (auto it = report.begin(); it != report.end(); ++it)
            if (it.key() != "time_ms") out[it.key()] = without_timings(it.value());
        return out;
    }
    if (report.is_array()) {
        json out = json::array();
        for (const auto& x : report) out.push_back(without_timings(x));
        return out;
    }
    return report;
}

bool witness_file_valid(const std::string& path, std::string* why) {
    auto fail = [&](std::string m) {
        if (why) *why = std::move(m);
        return false;
    };
    std::ifstream in(path);
    if (!in) return fail("cannot open " + path);
    json w = json::parse(in, nullptr, false);
    if (w.is_discarded() || !w.contains("n") || !w.contains("edges") || !w.contains("verdict"))
        return fail("malformed witness file");
    try {
        std::vector<Edge> es;
        for (const auto& e : w["edges"]) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        Graph g(w["n"].get<int>(), es);
        if (w["verdict"] != "colorable") return true;
        if (!w["coloring"].is_array()) return fail("colorable verdict without a coloring");
        Coloring c{4, w["coloring"].get<std::vector<int>>()};
        if (static_cast<int>(c.colors.size()) != g.order()) return fail("coloring length differs from n");
        for (int x : c.colors)
            if (x < 1 || x > 4) return fail("color out of range");
        if (!is_proper(g, c)) return fail("coloring is not proper");
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return true;
}

}  // namespace ptc
