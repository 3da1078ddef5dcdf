#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperterrain/approx.hpp"
#include "hyperterrain/exact.hpp"
#include "hyperterrain/generators.hpp"
#include "oracle_utils.hpp"

using namespace hyperterrain;

namespace {

const std::vector<std::string>& corpus() {
    static const std::vector<std::string> c{
        "gnm_connected(50,120,1)", "gnm_connected(60,240,2)", "cycle(15)",
        "grid(4,6)",               "random_tree(45,7)",       "fig3(2,1)",
        "fig3(1,2)",
    };
    return c;
}

}  // namespace

TEST_CASE("bfs_tree preserves root distances and picks smallest-id parents") {
    Graph c4 = gen_cycle(4);
    SpanningTree t = bfs_tree(c4, 0);
    CHECK(t.parent[2] == 1);  // neighbors {1, 3} at distance 1: pick 1
    validate_spanning_tree(c4, t);

    Graph g = gen_gnm_connected(40, 100, 3);
    SpanningTree tg = bfs_tree(g, 5);
    validate_spanning_tree(g, tg);
    auto d = bfs(g, 5);
    for (Vertex v = 0; v < g.n(); ++v) {
        int hops = 0;
        for (Vertex cur = v; cur != 5; cur = tg.parent[cur]) ++hops;
        CHECK(hops == d.dist[v]);
    }
}

TEST_CASE("validate_spanning_tree rejects non-trees") {
    Graph p5 = gen_path(5);
    SpanningTree bad;
    bad.root = 0;
    bad.parent = {0, 0, 1, 2, 2};
    bad.parent[4] = 2;  // edge (4,2) not in the path graph
    CHECK_THROWS_AS(validate_spanning_tree(p5, bad), Error);
    SpanningTree wrong_root{1, {0, 0, 1, 2, 3}};
    CHECK_THROWS_AS(validate_spanning_tree(p5, wrong_root), Error);
}

TEST_CASE("tree_eccentricities on hand graphs") {
    // star K_{1,4}: hub 0
    Graph star = Graph::from_edges(std::vector<std::pair<Label, Label>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    SpanningTree st = bfs_tree(star, 0);
    CHECK(tree_eccentricities(star, st) == std::vector<int>{1, 2, 2, 2, 2});

    Graph p5 = gen_path(5);
    CHECK(tree_eccentricities(p5, bfs_tree(p5, 0)) == std::vector<int>{4, 3, 2, 3, 4});
}

TEST_CASE("tree_eccentricities matches the naive per-vertex tree BFS") {
    for (std::uint64_t seed : {1, 5, 9}) {
        Graph t = gen_random_tree(200, seed);
        SpanningTree st = bfs_tree(t, static_cast<Vertex>(seed % t.n()));
        CHECK(tree_eccentricities(t, st) == testoracle::tree_ecc_naive(t.n(), st.root, st.parent));
    }
    // BFS trees of non-tree graphs too
    Graph g = gen_gnm_connected(80, 200, 2);
    SpanningTree st = bfs_tree(g, 0);
    CHECK(tree_eccentricities(g, st) == testoracle::tree_ecc_naive(g.n(), st.root, st.parent));
}

TEST_CASE("approx_pair_left") {
    // on a tree the sandwich collapses: estimate is exact
    Graph t = gen_random_tree(50, 3);
    EccentricityProfile tp = eccentricity_profile(t);
    ApproxEccentricities te = approx_pair_left(t, mutually_distant_pair(t, 0));
    CHECK(te.est == tp.ecc);

    // C4 with pair (0,2): vertex 1 estimated 1 vs true 2, within 2*delta = 2
    Graph c4 = gen_cycle(4);
    ApproxEccentricities ce = approx_pair_left(c4, mutually_distant_pair(c4, 0));
    CHECK(ce.anchor_x == 0);
    CHECK(ce.anchor_y == 2);
    CHECK(ce.est[1] == 1);
    CHECK(eccentricity_profile(c4).ecc[1] == 2);

    for (const auto& desc : corpus()) {
        CAPTURE(desc);
        Graph g = gen_family(parse_family(desc));
        EccentricityProfile prof = eccentricity_profile(g);
        const int d2 = hyperbolicity_exact(g).delta2;
        ApproxEccentricities est = approx_pair_left(g, mutually_distant_pair(g, 0));
        for (Vertex v = 0; v < g.n(); ++v) {
            const int err = prof.ecc[v] - est.est[v];
            CHECK(err >= 0);
            CHECK(err <= d2);
        }
    }
}

TEST_CASE("approx_pair_left requires a mutually distant pair") {
    Graph p5 = gen_path(5);
    SweepTrace fake;
    fake.sequence = {0, 1};  // (0,1) is not mutually distant in P5
    fake.dists = {1};
    CHECK_THROWS_AS(approx_pair_left(p5, fake), Error);
}

TEST_CASE("approx_tree_middle") {
    // tree input: the BFS tree is the tree itself, estimates exact
    Graph t = gen_random_tree(60, 8);
    auto [tt, te] = approx_tree_middle(t, mutually_distant_pair(t, 0));
    CHECK(te.est == eccentricity_profile(t).ecc);

    for (const auto& desc : corpus()) {
        CAPTURE(desc);
        Graph g = gen_family(parse_family(desc));
        EccentricityProfile prof = eccentricity_profile(g);
        const int d2 = hyperbolicity_exact(g).delta2;
        auto [tree, est] = approx_tree_middle(g, mutually_distant_pair(g, 0));
        validate_spanning_tree(g, tree);
        for (Vertex v = 0; v < g.n(); ++v) {
            const int err = est.est[v] - prof.ecc[v];
            CHECK(err >= 0);
            CHECK(err <= 2 * d2 + 1);
        }
    }
}

TEST_CASE("approx_tree_fast") {
    CHECK_THROWS_AS(approx_tree_fast(gen_path(5), 0, -1), Error);

    Graph t = gen_random_tree(60, 12);
    auto [tt, te] = approx_tree_fast(t, 0, 1);
    CHECK(te.est == eccentricity_profile(t).ecc);

    for (const auto& desc : corpus()) {
        CAPTURE(desc);
        Graph g = gen_family(parse_family(desc));
        EccentricityProfile prof = eccentricity_profile(g);
        const int d2 = hyperbolicity_exact(g).delta2;
        auto [tree, est] = approx_tree_fast(g, 0, 1);
        for (Vertex v = 0; v < g.n(); ++v) {
            const int err = est.est[v] - prof.ecc[v];
            CHECK(err >= 0);
            if (1 <= d2) CHECK(err <= 3 * d2);  // 6*delta + 1 - k at k = 1
        }
        // k = 2*delta is always admissible and recovers the 4*delta+1 bound
        auto [tree2, est2] = approx_tree_fast(g, 0, d2);
        for (Vertex v = 0; v < g.n(); ++v) {
            const int err = est2.est[v] - prof.ecc[v];
            CHECK(err >= 0);
            CHECK(err <= 2 * d2 + 1);
        }
    }
}

TEST_CASE("center_enclosure") {
    CHECK_THROWS_AS(center_enclosure(gen_path(5), 2, EnclosureMode::Beam, 0, std::nullopt), Error);

    // tree, mutually distant mode, k = 0: D(c,1) contains the center
    Graph t = gen_random_tree(40, 5);
    SweepTrace tr = mutually_distant_pair(t, 0);
    Vertex c = middle_vertex(canonical_shortest_path(t, tr.x(), tr.y()));
    auto ball = center_enclosure(t, c, EnclosureMode::MutuallyDistant, 0, 0);
    for (Vertex v : eccentricity_profile(t).center) {
        CHECK(std::binary_search(ball.begin(), ball.end(), v));
    }

    NamedGraph fig = gen_fig3({2, 1});
    const Graph& g = fig.graph;
    const int d2 = hyperbolicity_exact(g).delta2;
    SweepTrace ftr = mutually_distant_pair(g, 0);
    Vertex fc = middle_vertex(canonical_shortest_path(g, ftr.x(), ftr.y()));
    auto fball = center_enclosure(g, fc, EnclosureMode::MutuallyDistant, 0, d2);
    for (const char* name : {"u4", "w3", "v4"}) {
        CHECK(std::binary_search(fball.begin(), fball.end(), fig.by_name(name)));
    }

    for (const auto& desc : corpus()) {
        CAPTURE(desc);
        Graph h = gen_family(parse_family(desc));
        EccentricityProfile prof = eccentricity_profile(h);
        const int hd2 = hyperbolicity_exact(h).delta2;
        SweepTrace htr = mutually_distant_pair(h, 0);
        Vertex mc = middle_vertex(canonical_shortest_path(h, htr.x(), htr.y()));
        auto [bx, by] = beam(h, 0);
        Vertex bc = middle_vertex(canonical_shortest_path(h, bx, by));
        for (int k : {0, 1, 2}) {
            auto mball = center_enclosure(h, mc, EnclosureMode::MutuallyDistant, k, hd2);
            auto bball = center_enclosure(h, bc, EnclosureMode::Beam, k, hd2);
            for (Vertex v = 0; v < h.n(); ++v) {
                if (prof.layer[v] > k) continue;
                CHECK(std::binary_search(mball.begin(), mball.end(), v));
                CHECK(std::binary_search(bball.begin(), bball.end(), v));
            }
        }
    }
}

TEST_CASE("radius and diameter estimates") {
    Graph t = gen_random_tree(70, 6);
    EccentricityProfile tp = eccentricity_profile(t);
    RadiusDiameterEstimates test_t = radius_diameter_estimates(t);
    CHECK(test_t.rad_ub_tight == tp.rad);
    CHECK(test_t.diam_lb == tp.diam);

    Graph c4 = gen_cycle(4);
    CHECK(radius_diameter_estimates(c4).diam_lb == 2);

    for (const auto& desc : corpus()) {
        CAPTURE(desc);
        Graph g = gen_family(parse_family(desc));
        EccentricityProfile prof = eccentricity_profile(g);
        const int d2 = hyperbolicity_exact(g).delta2;
        RadiusDiameterEstimates est = radius_diameter_estimates(g);
        CHECK(est.rad_ub_fast >= prof.rad);
        CHECK(2 * est.rad_ub_fast <= 2 * prof.rad + 3 * d2);
        CHECK(est.rad_ub_tight >= prof.rad);
        CHECK(est.rad_ub_tight <= prof.rad + d2);
        CHECK(est.diam_lb <= prof.diam);
        CHECK(est.diam_lb >= prof.diam - d2);
        CHECK(est.diam_lb >= 2 * prof.rad - 2 * d2 - 1);
    }
}

TEST_CASE("guarantee metadata strings") {
    CHECK(guarantee_side(ApproxMethod::PairLeft) == "left");
    CHECK(guarantee_side(ApproxMethod::TreeMiddle) == "right");
    CHECK(guarantee_additive(ApproxMethod::PairLeft) == "2d");
    CHECK(guarantee_additive(ApproxMethod::TreeMiddle) == "4d+1");
    CHECK(guarantee_additive(ApproxMethod::TreeFastK) == "6d+1-k");
}
