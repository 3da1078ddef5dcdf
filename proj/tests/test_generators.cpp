#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "hyperterrain/exact.hpp"
#include "hyperterrain/generators.hpp"
#include "oracle_utils.hpp"

using namespace hyperterrain;

TEST_CASE("simple families") {
    Graph p = gen_path(5);
    EccentricityProfile prof = eccentricity_profile(p);
    CHECK(prof.rad == 2);
    CHECK(prof.diam == 4);
    CHECK(prof.center == std::vector<Vertex>{2});

    Graph k = gen_complete(4);
    EccentricityProfile kp = eccentricity_profile(k);
    CHECK(kp.rad == 1);
    CHECK(kp.diam == 1);

    Graph c = gen_cycle(6);
    EccentricityProfile cp = eccentricity_profile(c);
    CHECK(cp.rad == 3);
    CHECK(cp.diam == 3);

    Graph grid = gen_grid(3, 4);
    CHECK(grid.n() == 12);
    CHECK(grid.m() == 17);
}

TEST_CASE("random generators are pure functions of their seed") {
    auto dump = [](const Graph& g) {
        std::ostringstream os;
        write_edge_list(g, os);
        return os.str();
    };
    CHECK(dump(gen_random_tree(50, 7)) == dump(gen_random_tree(50, 7)));
    CHECK(dump(gen_random_tree(50, 7)) != dump(gen_random_tree(50, 8)));
    CHECK(dump(gen_gnm_connected(60, 150, 3)) == dump(gen_gnm_connected(60, 150, 3)));
}

TEST_CASE("random trees are trees and 0-hyperbolic") {
    Graph t = gen_random_tree(50, 7);
    CHECK(t.n() == 50);
    CHECK(t.m() == 49);
    CHECK(hyperbolicity_exact(t).delta2 == 0);
}

TEST_CASE("gnm_connected respects n and m") {
    Graph g = gen_gnm_connected(60, 150, 3);
    CHECK(g.n() == 60);
    CHECK(g.m() == 150);
    CHECK_THROWS_AS(gen_gnm_connected(10, 5, 1), Error);   // m < n-1
    CHECK_THROWS_AS(gen_gnm_connected(4, 100, 1), Error);  // m > n(n-1)/2
}

TEST_CASE("fig3 golden values for k=2, p=1") {
    NamedGraph ng = gen_fig3({2, 1});
    const Graph& g = ng.graph;
    CHECK(g.n() == 23);
    EccentricityProfile prof = eccentricity_profile(g);
    CHECK(prof.rad == 5);
    CHECK(prof.diam == 8);
    std::vector<Vertex> expect_center{ng.by_name("u4"), ng.by_name("w3"), ng.by_name("v4")};
    std::sort(expect_center.begin(), expect_center.end());
    CHECK(prof.center == expect_center);
    CHECK(prof.ecc[ng.by_name("x")] == 7);
    CHECK(prof.ecc[ng.by_name("u1")] == 8);
    CHECK(prof.ecc[ng.by_name("v1")] == 8);
    // e(x) is realized toward the long branch
    CHECK(bfs(g, ng.by_name("x")).dist[ng.by_name("u")] == 7);
}

TEST_CASE("fig3 diameter for k=3, p=2") {
    NamedGraph ng = gen_fig3({3, 2});
    EccentricityProfile prof = eccentricity_profile(ng.graph);
    CHECK(prof.diam == 12);  // 2*(k+p) + 2
}

TEST_CASE("fig3 formulas hold across the parameter box") {
    for (int k = 1; k <= 4; ++k) {
        for (int p = 1; p <= 3; ++p) {
            CAPTURE(k);
            CAPTURE(p);
            const int ell = k + p;
            NamedGraph ng = gen_fig3({k, p});
            const Graph& g = ng.graph;
            EccentricityProfile prof = eccentricity_profile(g);
            CHECK(prof.rad == ell + 2);
            CHECK(prof.diam == 2 * ell + 2);
            std::vector<Vertex> expect{ng.by_name("u" + std::to_string(k + 2)),
                                       ng.by_name("w" + std::to_string(k + 1)),
                                       ng.by_name("v" + std::to_string(k + 2))};
            std::sort(expect.begin(), expect.end());
            CHECK(prof.center == expect);
            CHECK(prof.ecc[ng.by_name("x")] == ell + k + 2);
            CHECK(prof.ecc[ng.by_name("u1")] == ell + k + 3);
            CHECK(bfs(g, ng.by_name("x")).dist[ng.by_name("u")] == ell + k + 2);
            CHECK(bfs(g, ng.by_name("u")).dist[ng.by_name("v")] == 2 * ell + 2);
            CHECK(bfs(g, ng.by_name("x*")).dist[ng.by_name("y*")] == 2 * ell + 2);
        }
    }
}

TEST_CASE("fig3 rejects bad parameters") {
    CHECK_THROWS_AS(gen_fig3({0, 1}), Error);
    CHECK_THROWS_AS(gen_fig3({1, 0}), Error);
}

TEST_CASE("family descriptors parse and round-trip") {
    for (const char* s : {"path(5)", "cycle(6)", "complete(4)", "grid(3,4)", "random_tree(50,7)",
                          "gnm_connected(60,150,3)", "fig3(2,1)"}) {
        FamilySpec spec = parse_family(s);
        CHECK(spec.descriptor() == s);
        Graph g = gen_family(spec);
        CHECK(g.n() >= 2);
    }
    CHECK_THROWS_AS(parse_family("nope(3)"), Error);
    CHECK_THROWS_AS(parse_family("path"), Error);
    CHECK_THROWS_AS(parse_family("path(x)"), Error);
    CHECK_THROWS_AS(parse_family("grid(3)"), Error);
}
