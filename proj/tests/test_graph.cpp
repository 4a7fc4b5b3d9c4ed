#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ptcolor/graph.hpp"

using namespace ptc;

TEST_CASE("construction") {
    Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.order() == 3);
    CHECK(tri.size() == 3);
    CHECK(tri.is_clique({0, 1, 2}));

    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph(2, {{-1, 1}}), GraphError);

    Graph dup(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.size() == 1);
    CHECK(dup.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("complement") {
    Graph c5 = oracle::cycle(5);
    Graph cc = c5.complement();
    CHECK(cc.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
    CHECK(cc.connected());

    Graph k4c = oracle::complete(4).complement();
    CHECK(k4c.order() == 4);
    CHECK(k4c.size() == 0);

    Graph c7c = oracle::cycle(7).complement();
    CHECK(c7c.size() == 14);
    for (int v = 0; v < 7; ++v) CHECK(c7c.degree(v) == 4);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Graph g = oracle::random_graph(1 + i % 9, 0.4, rng);
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("induced, without, components") {
    Graph p4 = oracle::path(4);
    Graph sub = p4.induced(std::vector<int>{0, 1, 3});
    CHECK(sub.order() == 3);
    CHECK(sub.edges() == std::vector<Edge>{{0, 1}});
    CHECK(p4.without({1}).edges() == std::vector<Edge>{{1, 2}});

    Graph two(5, {{0, 1}, {3, 4}});
    auto comps = two.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2});
    CHECK(comps[2] == std::vector<int>{3, 4});
    CHECK_FALSE(two.connected());
    CHECK(Graph(0, {}).connected());
}

TEST_CASE("blocks: small shapes") {
    SUBCASE("two triangles sharing a vertex") {
        Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
        auto d = blocks(g);
        CHECK(d.blocks.size() == 2);
        CHECK(d.cut_vertices == std::vector<int>{2});
    }
    SUBCASE("P4") {
        auto d = blocks(oracle::path(4));
        CHECK(d.blocks.size() == 3);
        CHECK(std::set<int>(d.cut_vertices.begin(), d.cut_vertices.end()) == std::set<int>{1, 2});
    }
    SUBCASE("C5") {
        auto d = blocks(oracle::cycle(5));
        CHECK(d.blocks.size() == 1);
        CHECK(d.cut_vertices.empty());
    }
    SUBCASE("isolated vertices are their own blocks") {
        auto d = blocks(Graph(3, {{0, 1}}));
        CHECK(d.blocks.size() == 2);
        CHECK(std::set<std::vector<int>>(d.blocks.begin(), d.blocks.end()) == std::set<std::vector<int>>{{0, 1}, {2}});
    }
    SUBCASE("empty graph") { CHECK(blocks(Graph(0, {})).blocks.empty()); }
}

TEST_CASE("blocks agree with the common-cycle oracle") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 400; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const double p = n >= 9 ? 0.25 : 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
        Graph g = oracle::random_graph(n, p, rng);
        auto d = blocks(g);
        std::set<std::vector<int>> got(d.blocks.begin(), d.blocks.end());
        CHECK(got.size() == d.blocks.size());
        CHECK(got == oracle::blocks(g));
        CHECK(std::set<int>(d.cut_vertices.begin(), d.cut_vertices.end()) == oracle::cut_vertices(g));

        // every edge in exactly one block; blocks share at most one vertex
        for (auto [u, v] : g.edges()) {
            int holders = 0;
            for (const auto& b : d.blocks)
                holders += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
            CHECK(holders == 1);
        }
        for (std::size_t a = 0; a < d.blocks.size(); ++a)
            for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
                std::vector<int> common;
                std::set_intersection(d.blocks[a].begin(), d.blocks[a].end(), d.blocks[b].begin(), d.blocks[b].end(),
                                      std::back_inserter(common));
                CHECK(common.size() <= 1);
            }

        // block-cut tree: a forest with one tree per component
        const int nodes = static_cast<int>(d.blocks.size() + d.cut_vertices.size());
        const int components = static_cast<int>(g.components().size());
        CHECK(static_cast<int>(d.block_tree.size()) == nodes - components);
    }
}

TEST_CASE("merge_block_colorings") {
    SUBCASE("two triangles sharing v") {
        Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
        auto d = blocks(g);
        std::vector<Coloring> per;
        for (const auto& b : d.blocks) {
            // shared vertex 2 gets local color 1 in one block, 2 in the other
            Coloring c{3, {}};
            for (std::size_t i = 0; i < b.size(); ++i) c.colors.push_back(static_cast<int>(i) + 1);
            per.push_back(c);
        }
        Coloring m = merge_block_colorings(g, d, per, 3);
        CHECK(is_proper(g, m));
    }
    SUBCASE("single block is the identity") {
        Graph g = oracle::cycle(5);
        auto d = blocks(g);
        Coloring c{3, {1, 2, 1, 2, 3}};
        Coloring m = merge_block_colorings(g, d, {c}, 3);
        CHECK(m.colors == c.colors);
    }
    SUBCASE("star K1,3") {
        Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
        auto d = blocks(g);
        std::vector<Coloring> per;
        for (std::size_t i = 0; i < d.blocks.size(); ++i) per.push_back(Coloring{2, i % 2 ? std::vector<int>{1, 2} : std::vector<int>{2, 1}});
        Coloring m = merge_block_colorings(g, d, per, 2);
        CHECK(is_proper(g, m));
    }
    SUBCASE("random graphs with random proper block colorings") {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 200; ++i) {
            Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 9), 0.3, rng);
            auto d = blocks(g);
            std::vector<Coloring> per;
            bool ok = true;
            for (const auto& b : d.blocks) {
                auto all = oracle::all_colorings(g.induced(b), 4);
                if (all.empty()) {
                    ok = false;
                    break;
                }
                per.push_back(Coloring{4, all[rng() % all.size()]});
            }
            if (!ok) continue;
            CHECK(is_proper(g, merge_block_colorings(g, d, per, 4)));
        }
    }
}
