#include <doctest.h>

#include "oracles.hpp"
#include "ptcolor/detect.hpp"

using namespace ptc;

TEST_CASE("pattern constants") {
    CHECK(pattern::path(6).size() == 5);
    CHECK(pattern::cycle(5).size() == 5);
    CHECK(pattern::complete(5).size() == 10);
    Graph b = pattern::banner();
    CHECK(b.order() == 5);
    CHECK(b.degree(0) == 1);  // pendant first
    CHECK(b.adjacent(0, 1));
    CHECK(validates(b.without({0}), oracle::cycle(4), {0, 1, 2, 3}));
    Graph c7c = pattern::c7_complement();
    CHECK(c7c.size() == 14);
    CHECK_FALSE(c7c.adjacent(0, 1));
    CHECK(c7c.adjacent(0, 2));
    CHECK_THROWS_AS(pattern::cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(pattern_by_name("Q3"), std::invalid_argument);
    CHECK(pattern_by_name("K4") == oracle::complete(4));
    CHECK(pattern_by_name("C7bar") == c7c);
}

TEST_CASE("find_induced examples") {
    auto p4 = find_induced(oracle::cycle(5), oracle::path(4), "P4");
    REQUIRE(p4);
    CHECK(p4->vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(validates(oracle::cycle(5), oracle::path(4), p4->vertices));

    CHECK_FALSE(find_induced(oracle::complete(4), oracle::cycle(4)));
    CHECK_FALSE(find_induced(pattern::c7_complement(), pattern::banner()));
    CHECK_FALSE(find_induced(oracle::path(3), oracle::path(4)));
}

TEST_CASE("find_induced_path examples") {
    CHECK_FALSE(find_induced_path(oracle::cycle(5), 5));
    auto p6 = find_induced_path(oracle::cycle(7), 6);
    REQUIRE(p6);
    CHECK(p6->vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK_FALSE(find_induced_path(pattern::banner(), 5));
    CHECK_THROWS_AS(find_induced_path(oracle::cycle(5), 0), std::invalid_argument);
}

TEST_CASE("clique search examples") {
    CHECK(clique_number(pattern::c7_complement()) == 3);
    CHECK(clique_number(oracle::cycle(5)) == 2);
    auto k5 = has_clique(oracle::complete(5), 5);
    REQUIRE(k5);
    CHECK(k5->vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK_FALSE(has_clique(oracle::cycle(5), 3));
    CHECK(clique_number(Graph(0, {})) == 0);
}

TEST_CASE("class membership examples") {
    CHECK_FALSE(class_violation(oracle::cycle(5), GraphClass::P6_banner_free));
    auto v = class_violation(oracle::path(6), GraphClass::P6_free);
    REQUIRE(v);
    CHECK(v->pattern_name == "P6");
    Graph c4_pendant(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    auto b = class_violation(c4_pendant, GraphClass::P6_banner_free);
    REQUIRE(b);
    CHECK(b->pattern_name == "banner");
    CHECK(b->vertices.front() == 4);  // pendant first
    CHECK(b->vertices[1] == 0);       // then its attachment
    CHECK_FALSE(class_violation(oracle::path(6), GraphClass::P7_free));
    CHECK(parse_graph_class(to_string(GraphClass::P7_free)) == GraphClass::P7_free);
    CHECK_THROWS_AS(parse_graph_class("P9_free"), std::invalid_argument);
}

TEST_CASE("find_induced agrees with subset-and-bijection enumeration") {
    std::mt19937_64 rng(21);
    std::vector<Graph> patterns = {oracle::path(3), oracle::path(4), oracle::path(5), oracle::path(6),
                                   oracle::cycle(4), oracle::cycle(5), oracle::cycle(6), oracle::complete(3),
                                   oracle::complete(4), pattern::banner(), Graph(3, {{0, 1}}), Graph(4, {})};
    for (int i = 0; i < 60; ++i) {
        // a few random patterns on up to 6 vertices too
        patterns.push_back(oracle::random_graph(2 + static_cast<int>(rng() % 5), 0.5, rng));
    }
    for (int i = 0; i < 400; ++i) {
        Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 8), 0.2 + 0.6 * static_cast<double>(rng() % 10) / 10.0, rng);
        const Graph& h = patterns[rng() % patterns.size()];
        auto cert = find_induced(g, h);
        CHECK(cert.has_value() == oracle::has_induced(g, h));
        if (cert) CHECK(validates(g, h, cert->vertices));
    }
}

TEST_CASE("for_each_induced visits every embedding") {
    int count = 0;
    for_each_induced(oracle::cycle(5), oracle::cycle(5), [&](const std::vector<int>& vs) {
        CHECK(validates(oracle::cycle(5), oracle::cycle(5), vs));
        ++count;
        return false;
    });
    CHECK(count == 10);  // automorphisms of C5
}

TEST_CASE("path detector matches the generic search and is monotone") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), 0.15 + 0.4 * static_cast<double>(rng() % 10) / 10.0, rng);
        for (int t = 1; t <= 7; ++t) {
            auto fast = find_induced_path(g, t);
            auto generic = find_induced(g, oracle::path(t));
            CHECK(fast.has_value() == generic.has_value());
            if (fast && generic) CHECK(fast->vertices == generic->vertices);
            if (fast && t >= 2) CHECK(find_induced_path(g, t - 1).has_value());
        }
    }
}

TEST_CASE("clique_number agrees with exhaustive subsets") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
        Graph g = oracle::random_graph(static_cast<int>(rng() % 9), 0.2 + 0.7 * static_cast<double>(rng() % 10) / 10.0, rng);
        const int w = oracle::clique_number(g);
        CHECK(clique_number(g) == w);
        auto c = max_clique(g);
        CHECK(static_cast<int>(c.size()) == w);
        CHECK(g.is_clique(c));
        for (int k = 1; k <= w + 1; ++k) {
            auto hc = has_clique(g, k);
            CHECK(hc.has_value() == (k <= w));
            if (hc) CHECK(g.is_clique(hc->vertices));
        }
    }
}
