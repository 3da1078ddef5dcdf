#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperterrain/convexity.hpp"
#include "hyperterrain/exact.hpp"
#include "hyperterrain/generators.hpp"
#include "hyperterrain/prng.hpp"

using namespace hyperterrain;

TEST_CASE("pseudoconvexity of path endpoints") {
    Graph p5 = gen_path(5);
    std::vector<Vertex> s{0, 4};
    PseudoconvexityReport rep = pseudoconvexity_beta(p5, s);
    CHECK(rep.beta_min == 2);
    REQUIRE(rep.witness.has_value());
    CHECK((*rep.witness)[2] == 2);  // z = middle vertex
    CHECK(quasiconvexity_eps(p5, s) == 2);
    // beta_min = 0 iff convex: the whole vertex set is convex
    std::vector<Vertex> all{0, 1, 2, 3, 4};
    CHECK(pseudoconvexity_beta(p5, all).beta_min == 0);
    CHECK_THROWS_AS(pseudoconvexity_beta(p5, std::vector<Vertex>{}), Error);
    CHECK_THROWS_AS(quasiconvexity_eps(p5, std::vector<Vertex>{}), Error);
}

TEST_CASE("odd/even endpoint sets on an even path are 1-quasiconvex") {
    Graph p7 = gen_path(7);  // path 0..2k with k = 3
    std::vector<Vertex> s1{0, 1, 3, 5, 6};
    std::sort(s1.begin(), s1.end());
    CHECK(quasiconvexity_eps(p7, s1) == 1);
    std::vector<Vertex> s2{0, 2, 4, 6};
    CHECK(quasiconvexity_eps(p7, s2) == 1);
    // their intersection is only k-quasiconvex
    std::vector<Vertex> inter{0, 6};
    CHECK(quasiconvexity_eps(p7, inter) == 3);
}

TEST_CASE("disks in trees are convex") {
    Graph t = gen_random_tree(40, 13);
    DistanceMatrix dm = all_pairs_distances(t);
    EccentricityProfile prof = eccentricity_profile(t, dm);
    for (const DiskConvexityResult& r : check_disk_pseudoconvexity(dm, prof, 0, 50, 7)) {
        CHECK(r.beta_min == 0);
        CHECK(r.ok);
    }
}

TEST_CASE("hand check on C4") {
    Graph c4 = gen_cycle(4);
    std::vector<Vertex> s{0, 1, 3};  // D(0, 1)
    PseudoconvexityReport rep = pseudoconvexity_beta(c4, s);
    CHECK(rep.beta_min == 1);  // z = 2 in I(1,3) at distance 1 from both
    const int d2 = hyperbolicity_exact(c4).delta2;
    CHECK(rep.beta_min <= std::max(0, d2 - 1));
}

TEST_CASE("matrix and graph routes agree") {
    Graph g = gen_gnm_connected(30, 70, 4);
    DistanceMatrix dm = all_pairs_distances(g);
    SplitMix64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Vertex c = static_cast<Vertex>(rng.below(g.n()));
        int r = static_cast<int>(rng.below(4));
        std::vector<Vertex> s;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (dm.at(c, v) <= r) s.push_back(v);
        }
        PseudoconvexityReport a = pseudoconvexity_beta(g, s);
        PseudoconvexityReport b = pseudoconvexity_beta(dm, s);
        CHECK(a.beta_min == b.beta_min);
        CHECK(a.witness == b.witness);
        std::vector<std::int32_t> ds = bfs_multi(g, s);
        CHECK(quasiconvexity_eps(g, s) == quasiconvexity_eps(dm, ds, s));
    }
}

TEST_CASE("layer sets are (2 delta - 1)-pseudoconvex with bounded diameter") {
    for (const char* desc : {"random_tree(40,2)", "fig3(2,1)", "gnm_connected(40,100,5)", "cycle(12)"}) {
        CAPTURE(desc);
        Graph g = gen_family(parse_family(desc));
        DistanceMatrix dm = all_pairs_distances(g);
        EccentricityProfile prof = eccentricity_profile(g, dm);
        const int d2 = hyperbolicity_exact(dm).delta2;
        for (const LayerConvexityResult& r : check_layer_pseudoconvexity(dm, prof, d2)) {
            CHECK(r.pseudo_ok);
            CHECK(r.diam_ok);
            if (d2 <= 1) CHECK(r.beta_min == 0);  // delta <= 1/2 means convex
        }
    }
}

TEST_CASE("intersection closure and pseudo implies quasi on sampled disks") {
    for (const char* desc : {"gnm_connected(35,90,6)", "grid(4,5)", "fig3(1,1)"}) {
        CAPTURE(desc);
        Graph g = gen_family(parse_family(desc));
        DistanceMatrix dm = all_pairs_distances(g);
        EccentricityProfile prof = eccentricity_profile(g, dm);
        SplitMix64 rng(hash_string(desc));
        for (int t = 0; t < 30; ++t) {
            auto draw = [&]() {
                Vertex c = static_cast<Vertex>(rng.below(g.n()));
                int r = static_cast<int>(rng.below(std::max(1, prof.ecc[c])));
                std::vector<Vertex> s;
                for (Vertex v = 0; v < g.n(); ++v) {
                    if (dm.at(c, v) <= r) s.push_back(v);
                }
                return s;
            };
            std::vector<Vertex> s1 = draw(), s2 = draw();
            PseudoconvexityReport b1 = pseudoconvexity_beta(dm, s1);
            PseudoconvexityReport b2 = pseudoconvexity_beta(dm, s2);
            std::vector<std::int32_t> ds1 = bfs_multi(g, s1);
            CHECK(quasiconvexity_eps(dm, ds1, s1) <= b1.beta_min);
            std::vector<Vertex> inter;
            std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(inter));
            if (inter.empty()) continue;
            CHECK(pseudoconvexity_beta(dm, inter).beta_min <= std::max(b1.beta_min, b2.beta_min));
        }
    }
}

TEST_CASE("member cap falls back to stride sampling") {
    Graph g = gen_gnm_connected(30, 80, 8);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < g.n(); ++v) s.push_back(v);
    s.pop_back();
    PseudoconvexityReport rep = pseudoconvexity_beta(g, s, /*member_cap=*/5);
    CHECK(!rep.exact);
    PseudoconvexityReport full = pseudoconvexity_beta(g, s);
    CHECK(full.exact);
    CHECK(rep.beta_min <= full.beta_min);  // sampled scan is a lower bound
}
