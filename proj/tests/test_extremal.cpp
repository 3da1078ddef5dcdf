#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperterrain/exact.hpp"
#include "hyperterrain/extremal.hpp"
#include "hyperterrain/generators.hpp"

using namespace hyperterrain;

TEST_CASE("furthest_vertex breaks ties toward the smallest id") {
    Graph p5 = gen_path(5);
    CHECK(furthest_vertex(p5, 2) == 0);  // F(2) = {0, 4}
    CHECK(furthest_vertex(p5, 0) == 4);

    NamedGraph fig = gen_fig3({2, 1});
    Vertex far = furthest_vertex(fig.graph, fig.by_name("x*"));
    EccentricityProfile prof = eccentricity_profile(fig.graph);
    CHECK(bfs(fig.graph, fig.by_name("x*")).dist[far] == prof.ecc[fig.by_name("x*")]);
}

TEST_CASE("mutually distant pair on a path") {
    Graph p5 = gen_path(5);
    SweepTrace t = mutually_distant_pair(p5, 2);
    CHECK(t.x() == 0);
    CHECK(t.y() == 4);
    CHECK(t.mutually_distant);
    CHECK(t.pair_distance() == 4);
}

TEST_CASE("trees: terminal pair realizes the diameter from any start") {
    Graph t = gen_random_tree(40, 11);
    EccentricityProfile prof = eccentricity_profile(t);
    for (Vertex s = 0; s < t.n(); s += 7) {
        SweepTrace tr = mutually_distant_pair(t, s);
        CHECK(tr.pair_distance() == prof.diam);
    }
}

TEST_CASE("sweep invariants on a mixed corpus") {
    for (const char* desc : {"gnm_connected(50,120,1)", "gnm_connected(50,200,2)", "cycle(17)",
                             "grid(4,6)", "fig3(2,1)", "random_tree(35,3)"}) {
        CAPTURE(desc);
        Graph g = gen_family(parse_family(desc));
        EccentricityProfile prof = eccentricity_profile(g);
        const int d2 = hyperbolicity_exact(g).delta2;
        for (Vertex s = 0; s < g.n(); s += std::max(1, g.n() / 6)) {
            SweepTrace tr = mutually_distant_pair(g, s);
            // terminal pair is mutually distant
            CHECK(tr.pair_distance() == prof.ecc[tr.x()]);
            CHECK(tr.pair_distance() == prof.ecc[tr.y()]);
            // step distances never decrease; after the first two sweeps at
            // most 2*delta strict improvements remain
            int strict = 0;
            for (std::size_t i = 1; i < tr.dists.size(); ++i) {
                CHECK(tr.dists[i] >= tr.dists[i - 1]);
                if (i >= 2 && tr.dists[i] > tr.dists[i - 1]) ++strict;
            }
            CHECK(strict <= d2);
            // d(x,y) >= 2 rad - 4 delta - 1
            CHECK(tr.pair_distance() >= 2 * prof.rad - 2 * d2 - 1);
            CHECK(tr.pair_distance() <= prof.diam);
        }
    }
}

TEST_CASE("beam") {
    Graph p5 = gen_path(5);
    CHECK(beam(p5, 2) == std::pair<Vertex, Vertex>{0, 4});

    Graph grid = gen_grid(3, 3);
    auto [x, y] = beam(grid, 4);  // start at the middle
    CHECK(bfs(grid, x).dist[y] == 4);

    for (const char* desc : {"gnm_connected(45,110,5)", "cycle(13)"}) {
        Graph g = gen_family(parse_family(desc));
        EccentricityProfile prof = eccentricity_profile(g);
        const int d2 = hyperbolicity_exact(g).delta2;
        for (Vertex z = 0; z < g.n(); z += 5) {
            auto [bx, by] = beam(g, z);
            CHECK(prof.ecc[by] >= prof.diam - d2);
        }
    }
}

TEST_CASE("middle_vertex floors from the first endpoint") {
    PathInGraph even{{0, 1, 2, 3, 4}};
    CHECK(middle_vertex(even) == 2);
    PathInGraph odd{{0, 1, 2, 3}};
    CHECK(middle_vertex(odd) == 1);
    PathInGraph single{{7}};
    CHECK(middle_vertex(single) == 7);
}

TEST_CASE("middle of a mutually distant pair has near-central eccentricity") {
    for (const char* desc : {"gnm_connected(40,100,4)", "grid(4,5)", "cycle(12)"}) {
        CAPTURE(desc);
        Graph g = gen_family(parse_family(desc));
        EccentricityProfile prof = eccentricity_profile(g);
        const int d2 = hyperbolicity_exact(g).delta2;
        SweepTrace tr = mutually_distant_pair(g, 0);
        PathInGraph path = canonical_shortest_path(g, tr.x(), tr.y());
        Vertex c = middle_vertex(path);
        CHECK(prof.ecc[c] <= prof.rad + d2);  // rad + 2*delta
        auto [bx, by] = beam(g, 0);
        PathInGraph bpath = canonical_shortest_path(g, bx, by);
        Vertex bc = middle_vertex(bpath);
        CHECK(2 * prof.ecc[bc] <= 2 * prof.rad + 3 * d2);  // rad + 3*delta
        CHECK(2 * prof.ecc[bc] <= 2 * ((bfs(g, bx).dist[by] + 1) / 2) + 4 * d2);
    }
}

TEST_CASE("slice lemma: vertices of I(y,x) at distance rad+k from y") {
    Graph g = gen_gnm_connected(35, 80, 8);
    DistanceMatrix dm = all_pairs_distances(g);
    EccentricityProfile prof = eccentricity_profile(g, dm);
    const int d2 = hyperbolicity_exact(dm).delta2;
    for (Vertex x = 0; x < g.n(); ++x) {
        for (Vertex y : furthest_set(dm, x)) {
            for (Vertex c = 0; c < g.n(); ++c) {
                if (dm.at(y, c) + dm.at(c, x) != dm.at(y, x)) continue;
                const int k = dm.at(y, c) - prof.rad;
                if (k < 0) continue;
                CHECK(prof.ecc[c] <= prof.rad + d2 + k);
            }
        }
    }
}
