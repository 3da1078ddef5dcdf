#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "hyperterrain/generators.hpp"
#include "hyperterrain/graph.hpp"
#include "hyperterrain/prng.hpp"
#include "oracle_utils.hpp"

using namespace hyperterrain;

namespace {

Graph make(std::initializer_list<std::pair<Label, Label>> edges) {
    std::vector<std::pair<Label, Label>> e(edges);
    return Graph::from_edges(e);
}

Graph p3() { return make({{0, 1}, {1, 2}}); }
Graph c4() { return make({{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph p5() { return make({{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("build_graph accepts a path and rejects malformed input") {
    Graph g = p3();
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.degree(1) == 2);

    CHECK_THROWS_AS(make({{0, 1}, {2, 3}}), Error);       // DisconnectedGraph
    CHECK_THROWS_AS(make({{0, 0}}), Error);               // SelfLoop
    CHECK_THROWS_AS(make({{0, 1}, {1, 0}}), Error);       // DuplicateEdge
    CHECK_THROWS_AS(Graph::from_edges({}), Error);        // EmptyInput
    try {
        make({{0, 1}, {2, 3}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DisconnectedGraph);
    }
    try {
        make({{0, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SelfLoop);
        CHECK(std::string(e.what()).find('0') != std::string::npos);
    }
}

TEST_CASE("dense relabeling keeps original labels") {
    Graph g = make({{10, 7}, {7, 42}});
    CHECK(g.n() == 3);
    CHECK(g.label(0) == 7);
    CHECK(g.label(2) == 42);
    CHECK(g.vertex_of(42).value() == 2);
    CHECK(!g.vertex_of(5).has_value());
}

TEST_CASE("bfs distances") {
    auto d = bfs(p3(), 0);
    CHECK(d.dist == std::vector<std::int32_t>{0, 1, 2});
    auto dc = bfs(c4(), 0);
    CHECK(dc.dist == std::vector<std::int32_t>{0, 1, 2, 1});
}

TEST_CASE("bfs is 1-Lipschitz along edges") {
    Graph g = gen_gnm_connected(40, 100, 7);
    for (Vertex s = 0; s < g.n(); ++s) {
        auto d = bfs(g, s);
        for (Vertex u = 0; u < g.n(); ++u) {
            for (Vertex v : g.neighbors(u)) {
                CHECK(std::abs(d.dist[u] - d.dist[v]) <= 1);
            }
        }
    }
}

TEST_CASE("interval basics") {
    Graph g = c4();
    auto d0 = bfs(g, 0), d2 = bfs(g, 2);
    CHECK(interval(g, 0, 2, d0, d2) == std::vector<Vertex>{0, 1, 2, 3});
    Graph h = p3();
    auto h0 = bfs(h, 0), h2 = bfs(h, 2);
    CHECK(interval(h, 0, 2, h0, h2) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("interval equals the union of enumerated shortest paths") {
    Graph g = gen_gnm_connected(30, 70, 3);
    SplitMix64 rng(99);
    for (int t = 0; t < 50; ++t) {
        Vertex x = static_cast<Vertex>(rng.below(g.n()));
        Vertex y = static_cast<Vertex>(rng.below(g.n()));
        auto dx = bfs(g, x), dy = bfs(g, y);
        CHECK(interval(g, x, y, dx, dy) == testoracle::shortest_path_vertex_union(g, x, y));
    }
}

TEST_CASE("slice basics and bounds") {
    CHECK(slice(c4(), 0, 2, 1) == std::vector<Vertex>{1, 3});
    CHECK(slice(p3(), 0, 2, 0) == std::vector<Vertex>{0});
    CHECK(slice(p5(), 0, 4, 2) == std::vector<Vertex>{2});
    CHECK_THROWS_AS(slice(p3(), 0, 2, 3), Error);
    CHECK_THROWS_AS(slice(p3(), 0, 2, -1), Error);
}

TEST_CASE("slices partition the interval") {
    Graph g = gen_gnm_connected(25, 60, 5);
    auto dx = bfs(g, 0), dy = bfs(g, g.n() - 1);
    auto ivl = interval(g, 0, g.n() - 1, dx, dy);
    std::size_t total = 0;
    for (int k = 0; k <= dx.dist[g.n() - 1]; ++k) {
        auto s = slice(g, 0, g.n() - 1, k);
        total += s.size();
        for (Vertex v : s) CHECK(std::binary_search(ivl.begin(), ivl.end(), v));
    }
    CHECK(total == ivl.size());
}

TEST_CASE("disk") {
    Graph g = p5();
    Vertex c = 2;
    CHECK(disk(g, std::span<const Vertex>(&c, 1), 0) == std::vector<Vertex>{2});
    CHECK(disk(g, std::span<const Vertex>(&c, 1), 1) == std::vector<Vertex>{1, 2, 3});
    std::vector<Vertex> all{0, 1, 2, 3, 4};
    CHECK(disk(g, all, 0) == all);
}

TEST_CASE("doubled Gromov product") {
    CHECK(gromov_product2(p3(), 0, 2, 1) == 0);
    CHECK(gromov_product2(p3(), 1, 1, 1) == 0);
    CHECK(gromov_product2(c4(), 0, 2, 1) == 0);
    // symmetric in x, y and non-negative
    Graph g = gen_gnm_connected(20, 45, 11);
    SplitMix64 rng(4);
    for (int t = 0; t < 40; ++t) {
        Vertex x = static_cast<Vertex>(rng.below(g.n()));
        Vertex y = static_cast<Vertex>(rng.below(g.n()));
        Vertex z = static_cast<Vertex>(rng.below(g.n()));
        int a = gromov_product2(g, x, y, z);
        CHECK(a == gromov_product2(g, y, x, z));
        CHECK(a >= 0);
    }
}

TEST_CASE("canonical shortest path") {
    auto p = canonical_shortest_path(p3(), 0, 2);
    CHECK(p.vertices == std::vector<Vertex>{0, 1, 2});
    // tie on C4 resolved toward the smaller neighbor id
    auto q = canonical_shortest_path(c4(), 0, 2);
    CHECK(q.vertices == std::vector<Vertex>{0, 1, 2});

    Graph g = gen_gnm_connected(35, 90, 13);
    SplitMix64 rng(8);
    for (int t = 0; t < 100; ++t) {
        Vertex a = static_cast<Vertex>(rng.below(g.n()));
        Vertex b = static_cast<Vertex>(rng.below(g.n()));
        auto path = canonical_shortest_path(g, a, b);
        CHECK(path.length() == bfs(g, a).dist[b]);
        CHECK(is_shortest_path(g, path));
        // reproducible
        CHECK(canonical_shortest_path(g, a, b).vertices == path.vertices);
    }
}

TEST_CASE("edge list io") {
    std::istringstream in("# comment\n% also a comment\n\n0 1\n1 2\n");
    Graph g = read_edge_list(in);
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);

    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream back(out.str());
    Graph h = read_edge_list(back);
    CHECK(h.n() == g.n());
    CHECK(h.m() == g.m());

    std::istringstream bad("0 1\n1 two\n");
    CHECK_THROWS_AS(read_edge_list(bad), Error);
    std::istringstream neg("0 -1\n");
    CHECK_THROWS_AS(read_edge_list(neg), Error);
    std::istringstream trail("0 1 2\n");
    CHECK_THROWS_AS(read_edge_list(trail), Error);
}
