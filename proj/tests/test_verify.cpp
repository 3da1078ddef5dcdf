#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperterrain/generators.hpp"
#include "hyperterrain/verify.hpp"

using namespace hyperterrain;
using nlohmann::json;

namespace {

SuiteConfig quick_config() {
    SuiteConfig cfg;
    cfg.sample_budget = 20000;
    cfg.path_samples = 100;
    cfg.disk_samples = 50;
    cfg.disk_pair_samples = 25;
    return cfg;
}

}  // namespace

TEST_CASE("registry lists every check once, sorted") {
    auto ids = check_registry();
    CHECK(ids.size() == 32);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "DUAL-1") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "TER-9") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "ID-2") != ids.end());
}

TEST_CASE("trees pass every check with delta = 0") {
    Graph t = gen_random_tree(30, 1);
    VerificationReport rep = run_suite(t, "random_tree(30,1)", quick_config());
    CHECK(rep.delta2 == 0);
    CHECK(rep.all_pass());
    for (const CheckOutcome& c : rep.checks) {
        CAPTURE(c.check_id);
        CHECK(c.status != CheckStatus::Fail);
    }
}

TEST_CASE("fig3 passes every check") {
    Graph g = gen_fig3({2, 1}).graph;
    VerificationReport rep = run_suite(g, "fig3(2,1)", quick_config());
    CHECK(rep.all_pass());
    CHECK(rep.rad == 5);
    CHECK(rep.diam == 8);
    CHECK(rep.delta2 == 4);
}

TEST_CASE("the documented acceptance graph passes") {
    Graph g = gen_gnm_connected(60, 150, 3);
    VerificationReport rep = run_suite(g, "gnm_connected(60,150,3)", quick_config());
    CHECK(rep.all_pass());
}

TEST_CASE("reports are byte-identical across runs") {
    Graph g = gen_gnm_connected(40, 100, 2);
    SuiteConfig cfg = quick_config();
    std::string a = run_suite(g, "g", cfg).to_json().dump(2);
    std::string b = run_suite(g, "g", cfg).to_json().dump(2);
    CHECK(a == b);
}

TEST_CASE("suite rejects graphs above the oracle caps") {
    SuiteConfig cfg = quick_config();
    cfg.limits.delta_cap = 10;
    Graph g = gen_gnm_connected(20, 50, 1);
    CHECK_THROWS_AS(run_suite(g, "too-big", cfg), Error);
}

TEST_CASE("witness re-verification rejects non-violations") {
    Graph c4 = gen_cycle(4);
    // a structurally valid tuple that does not violate the duality corollary
    json w;
    w["vertices"] = {{"x", 0}, {"y", 2}, {"c", 1}, {"v", 3}};
    CHECK(!reverify_witness(c4, "DUAL-2", w));
    CHECK(!reverify_witness(c4, "DUAL-1", w));
    // claims about vertices that satisfy the bound are rejected too
    json e5;
    e5["vertices"] = {{"c", 0}, {"v", 2}};
    CHECK(!reverify_witness(c4, "ECC-5", e5));
    // null witness never re-verifies
    CHECK(!reverify_witness(c4, "DUAL-2", json()));
    // identity witnesses on real shortest paths cannot violate
    json idw;
    idw["path"] = {0, 1, 2};
    CHECK(!reverify_witness(c4, "ID-1", idw));
    CHECK(!reverify_witness(c4, "TER-1", idw));
    // a non-path never re-verifies
    json notpath;
    notpath["path"] = {0, 2};
    CHECK(!reverify_witness(c4, "ID-1", notpath));
}

TEST_CASE("default corpus has the documented shape") {
    auto corpus = default_corpus();
    CHECK(corpus.size() == 78);
    int fig3 = 0, gnm = 0;
    for (const CorpusEntry& e : corpus) {
        if (e.spec.kind == FamilySpec::Kind::Fig3) ++fig3;
        if (e.spec.kind == FamilySpec::Kind::GnmConnected) ++gnm;
        // ids are the generator descriptors
        CHECK(e.id == e.spec.descriptor());
    }
    CHECK(fig3 == 6);
    CHECK(gnm == 40);
}

TEST_CASE("run_corpus aggregates deterministically") {
    std::vector<CorpusEntry> small{
        {"random_tree(25,1)", parse_family("random_tree(25,1)")},
        {"cycle(10)", parse_family("cycle(10)")},
        {"gnm_connected(30,70,2)", parse_family("gnm_connected(30,70,2)")},
    };
    SuiteConfig cfg = quick_config();
    CorpusReport a = run_corpus(small, cfg);
    CHECK(a.all_pass());
    CHECK(a.graphs.size() == 3);
    CHECK(a.graphs[0].graph_id == "random_tree(25,1)");
    CorpusReport b = run_corpus(small, cfg);
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));
}
