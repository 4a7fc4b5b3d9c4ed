#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "ptcolor/corpus.hpp"
#include "ptcolor/detect.hpp"
#include "ptcolor/listcolor.hpp"
#include "ptcolor/p6banner.hpp"

using namespace ptc;

namespace {

Graph add_vertex(const Graph& g, const std::vector<int>& nbrs) {
    auto es = g.edges();
    for (int u : nbrs) es.emplace_back(u, g.order());
    return Graph(g.order() + 1, es);
}

void check_decision(const Graph& g, const Decision& d) {
    if (d.kind == Decision::Kind::Colorable) {
        REQUIRE(d.coloring);
        CHECK(d.coloring->k == 4);
        CHECK(oracle::proper(g, d.coloring->colors));
        for (int c : d.coloring->colors) CHECK((c >= 1 && c <= 4));
    }
    if (d.kind == Decision::Kind::NotInClass) {
        REQUIRE(d.certificate);
        CHECK(validates(g, pattern_by_name(d.certificate->pattern_name), d.certificate->vertices));
    }
}

std::multiset<int> class_sizes(const Coloring& c) {
    std::map<int, int> count;
    for (int x : c.colors) ++count[x];
    std::multiset<int> out;
    for (auto [col, n] : count) out.insert(n);
    return out;
}

const std::vector<int> c5_cycle = {0, 1, 2, 3, 4};
const std::vector<int> c7_cycle = {0, 1, 2, 3, 4, 5, 6};

}  // namespace

TEST_CASE("solve4 examples") {
    auto k5 = solve4(oracle::complete(5));
    CHECK(k5.kind == Decision::Kind::NotColorable);

    auto c5 = solve4(oracle::cycle(5));
    CHECK(c5.kind == Decision::Kind::Colorable);
    check_decision(oracle::cycle(5), c5);

    auto p6 = solve4(oracle::path(6));
    CHECK(p6.kind == Decision::Kind::NotInClass);
    REQUIRE(p6.certificate);
    CHECK(p6.certificate->pattern_name == "P6");
    check_decision(oracle::path(6), p6);

    for (int n : {0, 1}) {
        auto d = solve4(Graph(n, {}));
        CHECK(d.kind == Decision::Kind::Colorable);
        check_decision(Graph(n, {}), d);
    }
}

TEST_CASE("C7 complement route") {
    Graph c7c = pattern::c7_complement();
    auto d = case_c7bar(c7c, c7_cycle);
    CHECK(d.kind == Decision::Kind::Colorable);
    check_decision(c7c, d);
    REQUIRE(d.coloring);
    CHECK(class_sizes(*d.coloring) == std::multiset<int>{1, 2, 2, 2});

    auto s = solve4(c7c);
    CHECK(s.kind == Decision::Kind::Colorable);
    REQUIRE(s.coloring);
    CHECK(class_sizes(*s.coloring) == std::multiset<int>{1, 2, 2, 2});
    CHECK(s.routes == std::vector<std::string>{"c7bar"});

    Graph universal = add_vertex(c7c, c7_cycle);
    CHECK(case_c7bar(universal, c7_cycle).kind == Decision::Kind::NotColorable);
    CHECK(solve4(universal).kind == Decision::Kind::NotColorable);
    CHECK_FALSE(oracle::backtrack_colorable(universal, 4));

    Graph pendant = add_vertex(c7c, {1});
    auto p = case_c7bar(pendant, c7_cycle);
    CHECK(p.kind == Decision::Kind::NotInClass);
    check_decision(pendant, p);
    CHECK(solve4(pendant).kind == Decision::Kind::NotInClass);

    CHECK_THROWS_AS(case_c7bar(c7c, {0, 2, 1, 3, 4, 5, 6}), std::invalid_argument);
}

TEST_CASE("C5 route") {
    Graph c5 = oracle::cycle(5);
    auto d = case_c5(c5, c5_cycle);
    CHECK(d.kind == Decision::Kind::Colorable);
    check_decision(c5, d);

    // C5 joined to an edge: chromatic number 5, clique number 4
    Graph joined = add_vertex(add_vertex(c5, c5_cycle), {0, 1, 2, 3, 4, 5});
    CHECK(oracle::clique_number(joined) == 4);
    CHECK_FALSE(class_violation(joined, GraphClass::P6_banner_free));
    CHECK(case_c5(joined, c5_cycle).kind == Decision::Kind::NotColorable);
    CHECK(solve4(joined).kind == Decision::Kind::NotColorable);

    Graph s3 = add_vertex(c5, {4, 0, 1});
    auto cls = classify_against_cycle(s3, c5_cycle, CycleFlavor::C5);
    CHECK(cls.s3[0] == std::vector<int>{5});
    CHECK(cls.irregular.empty());
    auto e = case_c5(s3, c5_cycle);
    CHECK(e.kind == Decision::Kind::Colorable);
    check_decision(s3, e);

    CHECK_THROWS_AS(case_c5(c5, {0, 2, 1, 3, 4}), std::invalid_argument);
}

TEST_CASE("classify_against_cycle") {
    Graph c7c = pattern::c7_complement();
    auto empty = classify_against_cycle(c7c, c7_cycle, CycleFlavor::C7Complement);
    for (const auto& bucket : empty.by_count) CHECK(bucket.empty());
    CHECK(empty.irregular.empty());

    Graph g = add_vertex(c7c, {0, 2});
    auto s = classify_against_cycle(g, c7_cycle, CycleFlavor::C7Complement);
    CHECK(s.s(2) == std::vector<int>{7});
    CHECK(s.cycle_neighbors[7] == 0b101);
    CHECK(s.irregular.empty());

    // a 2-vertex on a C7 edge pair is off pattern
    auto edge_pair = classify_against_cycle(add_vertex(c7c, {3, 4}), c7_cycle, CycleFlavor::C7Complement);
    CHECK(edge_pair.irregular == std::vector<int>{7});

    auto c5 = classify_against_cycle(add_vertex(oracle::cycle(5), {2, 3}), c5_cycle, CycleFlavor::C5);
    CHECK(c5.s2[0] == std::vector<int>{5});
    CHECK(c5.irregular.empty());

    auto s4 = classify_against_cycle(add_vertex(oracle::cycle(5), {0, 1, 3, 4}), c5_cycle, CycleFlavor::C5);
    CHECK(s4.s4[2] == std::vector<int>{5});
    auto s1 = classify_against_cycle(add_vertex(oracle::cycle(5), {3}), c5_cycle, CycleFlavor::C5);
    CHECK(s1.s1[3] == std::vector<int>{5});
    // v_{i-2} and v_{i+2} are adjacent, so {v0, v1} is S2(v3)
    auto pair = classify_against_cycle(add_vertex(oracle::cycle(5), {0, 1}), c5_cycle, CycleFlavor::C5);
    CHECK(pair.s2[3] == std::vector<int>{5});
    auto odd = classify_against_cycle(add_vertex(oracle::cycle(5), {0, 2}), c5_cycle, CycleFlavor::C5);
    CHECK(odd.irregular == std::vector<int>{5});
    auto gap = classify_against_cycle(add_vertex(oracle::cycle(5), {0, 1, 3}), c5_cycle, CycleFlavor::C5);
    CHECK(gap.irregular == std::vector<int>{5});

    CHECK_THROWS_AS(classify_against_cycle(c7c, c5_cycle, CycleFlavor::C5), std::invalid_argument);
    CHECK_THROWS_AS(classify_against_cycle(oracle::cycle(7), c7_cycle, CycleFlavor::C7Complement), std::invalid_argument);
}

TEST_CASE("buckets partition the outside vertices") {
    auto corpus = gen_corpus(12, 120, 5);
    int checked = 0;
    for (const auto& e : corpus) {
        auto c = find_induced(e.graph, pattern::cycle(5));
        if (!c) continue;
        auto s = classify_against_cycle(e.graph, c->vertices, CycleFlavor::C5);
        std::vector<int> seen(static_cast<std::size_t>(e.graph.order()), 0);
        for (const auto& b : s.by_count)
            for (int v : b) ++seen[static_cast<std::size_t>(v)];
        for (int v : c->vertices) ++seen[static_cast<std::size_t>(v)];
        for (int x : seen) CHECK(x == 1);
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("solve4 agrees with independent backtracking on the corpus") {
    std::map<std::string, int> routes;
    int colorable = 0;
    for (const auto& e : gen_corpus(12, 400, 21)) {
        REQUIRE_FALSE(class_violation(e.graph, GraphClass::P6_banner_free));
        auto d = solve4(e.graph);
        CHECK(d.kind != Decision::Kind::NotInClass);
        const bool expected = oracle::backtrack_colorable(e.graph, 4);
        CHECK_MESSAGE((d.kind == Decision::Kind::Colorable) == expected, "corpus id ", e.id);
        check_decision(e.graph, d);
        colorable += expected;
        for (const auto& r : d.routes) ++routes[r];
    }
    CHECK(routes["c5"] > 0);
    CHECK(routes["c7bar"] > 0);
    CHECK(colorable > 0);
    CHECK(colorable < 400);
}

TEST_CASE("verdict is invariant under relabeling") {
    std::mt19937_64 rng(2);
    for (const auto& e : gen_corpus(12, 120, 8)) {
        Graph h = oracle::relabel(e.graph, oracle::random_perm(e.graph.order(), rng));
        auto a = solve4(e.graph), b = solve4(h);
        CHECK(a.kind == b.kind);
        check_decision(h, b);
    }
}

TEST_CASE("structural audits stay silent on the corpus") {
    for (const auto& e : gen_corpus(13, 300, 4)) {
        auto lines = audit_structure(e.graph, true);
        CHECK_MESSAGE(lines.empty(), "corpus id ", e.id, ": ", lines.empty() ? "" : lines.front());
    }
}

TEST_CASE("audits flag violations outside the class") {
    // an S1 vertex beside the C7 complement
    Graph pendant = add_vertex(pattern::c7_complement(), {1});
    auto s = classify_against_cycle(pendant, c7_cycle, CycleFlavor::C7Complement);
    CHECK_FALSE(audit_c7bar_claims(pendant, s).empty());
    // two S3 vertices on the same P3 that are non-adjacent
    Graph twins = add_vertex(add_vertex(oracle::cycle(5), {4, 0, 1}), {4, 0, 1});
    auto t = classify_against_cycle(twins, c5_cycle, CycleFlavor::C5);
    CHECK_FALSE(audit_c5_claims(twins, t).empty());
}

TEST_CASE("no 2-vertex can sit beside the C7 complement inside the class") {
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) {
            Graph g = add_vertex(pattern::c7_complement(), {a, b});
            CHECK_MESSAGE(oracle::has_induced(g, pattern::banner()), "pair ", a, ",", b);
        }
}

TEST_CASE("planted examples") {
    // C7 complement with a 5-vertex missing v4 and v6
    Graph g = add_vertex(pattern::c7_complement(), {0, 1, 2, 3, 5});
    REQUIRE_FALSE(class_violation(g, GraphClass::P6_banner_free));
    REQUIRE_FALSE(oracle::has_induced(g, oracle::cycle(5)));
    auto planted = solve4(g);
    CHECK(planted.routes == std::vector<std::string>{"c7bar"});
    CHECK(planted.kind == (oracle::backtrack_colorable(g, 4) ? Decision::Kind::Colorable : Decision::Kind::NotColorable));
    check_decision(g, planted);

    // C5 with an S3(v0) vertex and an S5 vertex
    Graph h = add_vertex(add_vertex(oracle::cycle(5), {4, 0, 1}), {0, 1, 2, 3, 4});
    REQUIRE_FALSE(class_violation(h, GraphClass::P6_banner_free));
    auto d = solve4(h);
    CHECK(d.routes == std::vector<std::string>{"c5"});
    CHECK(d.kind == (oracle::backtrack_colorable(h, 4) ? Decision::Kind::Colorable : Decision::Kind::NotColorable));
    check_decision(h, d);
}
