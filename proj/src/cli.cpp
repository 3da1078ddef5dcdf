#include "hyperterrain/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperterrain/approx.hpp"
#include "hyperterrain/convexity.hpp"
#include "hyperterrain/exact.hpp"
#include "hyperterrain/extremal.hpp"
#include "hyperterrain/generators.hpp"
#include "hyperterrain/graph.hpp"
#include "hyperterrain/json_out.hpp"
#include "hyperterrain/parallel.hpp"
#include "hyperterrain/verify.hpp"

namespace hyperterrain {

namespace {

using nlohmann::json;

struct InputOpts {
    std::string file;
    std::string gen;

    Graph load() const {
        if (!gen.empty()) return gen_family(parse_family(gen));
        if (!file.empty()) {
            if (file == "-") return read_edge_list(std::cin);
            return load_edge_list_file(file);
        }
        fail(ErrorCode::BadInput, "no input: pass an edge-list file or --gen DESCRIPTOR");
    }
    std::string id() const { return !gen.empty() ? gen : file; }
};

void add_input_opts(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("file", in.file, "edge-list file ('-' for stdin)");
    cmd->add_option("--gen", in.gen, "generate input, e.g. 'gnm_connected(60,150,3)' or 'fig3(2,1)'");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_gen(const std::string& desc, const std::string& out_path, std::ostream& out) {
    Graph g = gen_family(parse_family(desc));
    if (out_path.empty() || out_path == "-") {
        out << "# " << desc << "\n";
        write_edge_list(g, out);
    } else {
        std::ofstream f(out_path);
        if (!f) fail(ErrorCode::BadInput, "cannot open output file: " + out_path);
        f << "# " << desc << "\n";
        write_edge_list(g, f);
    }
    return 0;
}

int cmd_stats(const InputOpts& in, const std::string& format, const OracleLimits& limits, int threads,
              std::ostream& out) {
    Graph g = in.load();
    std::optional<EccentricityProfile> prof;
    std::optional<HyperbolicityCertificate> hyp;
    std::string profile_status = "ok", delta_status = "ok";
    if (g.n() <= limits.matrix_cap) {
        prof = eccentricity_profile(g, limits, threads);
    } else {
        profile_status = "skipped (n > " + std::to_string(limits.matrix_cap) + ")";
    }
    if (prof && g.n() <= limits.delta_cap) {
        hyp = hyperbolicity_exact(g, limits, threads);
    } else {
        delta_status = "skipped (n > " + std::to_string(limits.delta_cap) + ")";
    }

    if (format == "json") {
        json j;
        j["input"] = in.id();
        j["n"] = g.n();
        j["m"] = g.m();
        j["profile_status"] = profile_status;
        j["delta2_status"] = delta_status;
        if (prof) {
            j["rad"] = prof->rad;
            j["diam"] = prof->diam;
            j["center_size"] = prof->center.size();
            std::vector<int> hist(prof->diam - prof->rad + 1, 0);
            for (int l : prof->layer) ++hist[l];
            j["layers"] = hist;
        }
        j["delta2"] = hyp ? json(hyp->delta2) : json(nullptr);
        emit(out, j);
        return 0;
    }
    out << "input: " << in.id() << "\n";
    out << "n: " << g.n() << "\nm: " << g.m() << "\n";
    if (prof) {
        out << "rad: " << prof->rad << "\ndiam: " << prof->diam << "\n";
        out << "center_size: " << prof->center.size() << "\n";
        if (hyp) {
            out << "delta2: " << hyp->delta2 << " (delta = " << hyp->delta2 / 2.0 << ")\n";
        } else {
            out << "delta2: " << delta_status << "\n";
        }
        out << "layers:";
        std::vector<int> hist(prof->diam - prof->rad + 1, 0);
        for (int l : prof->layer) ++hist[l];
        for (std::size_t k = 0; k < hist.size(); ++k) out << ' ' << k << ':' << hist[k];
        out << "\n";
    } else {
        out << "exact metrics: " << profile_status << "\n";
    }
    return 0;
}

int cmd_ecc(const InputOpts& in, const std::string& mode, int k, Vertex start, bool with_exact,
            const std::string& format, const OracleLimits& limits, int threads, std::ostream& out) {
    Graph g = in.load();
    ApproxEccentricities est;
    if (mode == "exact") {
        EccentricityProfile prof = eccentricity_profile(g, limits, threads);
        est.est = prof.ecc;
        est.method = ApproxMethod::PairLeft;  // placeholder; serialized specially below
    } else if (mode == "pair") {
        est = approx_pair_left(g, mutually_distant_pair(g, start));
    } else if (mode == "tree") {
        est = approx_tree_middle(g, mutually_distant_pair(g, start)).second;
    } else if (mode == "tree-fast") {
        est = approx_tree_fast(g, start, k).second;
    } else {
        fail(ErrorCode::InvalidParams, "unknown mode '" + mode + "'");
    }

    std::optional<EccentricityProfile> exact;
    if (with_exact && mode != "exact") exact = eccentricity_profile(g, limits, threads);

    if (format == "json") {
        json j;
        if (mode == "exact") {
            j["method"] = "exact";
            j["est"] = est.est;
            j["guarantee"] = {{"side", "exact"}, {"additive", "0"}};
            json labels = json::array();
            for (Label l : g.labels()) labels.push_back(l);
            j["labels"] = std::move(labels);
        } else {
            j = approx_json(g, est);
        }
        if (exact) {
            j["exact"] = exact->ecc;
        }
        emit(out, j);
        return 0;
    }
    const std::string guarantee =
        mode == "exact" ? "exact:0" : guarantee_side(est.method) + ":" + guarantee_additive(est.method);
    out << "# vertex\test" << (exact ? "\texact\terror" : "") << "\tguarantee\n";
    for (Vertex v = 0; v < g.n(); ++v) {
        out << g.label(v) << '\t' << est.est[v];
        if (exact) out << '\t' << exact->ecc[v] << '\t' << (est.est[v] - exact->ecc[v]);
        out << '\t' << guarantee << '\n';
    }
    return 0;
}

int cmd_terrain(const InputOpts& in, Label from, Label to, const std::string& format,
                const OracleLimits& limits, int threads, std::ostream& out) {
    Graph g = in.load();
    auto vf = g.vertex_of(from);
    auto vt = g.vertex_of(to);
    if (!vf) fail(ErrorCode::UnknownVertex, "no vertex labeled " + std::to_string(from));
    if (!vt) fail(ErrorCode::UnknownVertex, "no vertex labeled " + std::to_string(to));
    EccentricityProfile prof = eccentricity_profile(g, limits, threads);
    PathInGraph path = canonical_shortest_path(g, *vf, *vt);
    TerrainSegmentation seg = segment_path(g, prof, path);
    if (format == "json") {
        emit(out, segmentation_json(g, seg));
        return 0;
    }
    out << "path:";
    for (Vertex v : path.vertices) out << ' ' << g.label(v);
    out << "\necc: ";
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        out << (i ? " " : "") << prof.ecc[path.vertices[i]];
    }
    out << "\nstrip: " << render_strip(seg) << "\n";
    for (const TerrainSegment& s : seg.segments) {
        out << segment_label_name(s.label) << " start=" << s.start << " len=" << s.length;
        if (s.plain_kind) out << " kind=" << plain_kind_name(*s.plain_kind);
        out << "\n";
    }
    out << "U=" << seg.up_edges << " H=" << seg.horizontal_edges << " D=" << seg.down_edges << "\n";
    return 0;
}

int cmd_convexity(const InputOpts& in, std::optional<int> delta2_arg, int samples, std::uint64_t seed,
                  const OracleLimits& limits, int threads, std::ostream& out) {
    Graph g = in.load();
    DistanceMatrix dm = all_pairs_distances(g, limits, threads);
    EccentricityProfile prof = eccentricity_profile(g, dm);
    int delta2;
    if (delta2_arg) {
        delta2 = *delta2_arg;
    } else {
        if (g.n() > limits.delta_cap) {
            fail(ErrorCode::MissingDelta,
                 "n exceeds the exact-delta cap; pass --delta2 or raise --force");
        }
        delta2 = hyperbolicity_exact(dm, limits, threads).delta2;
    }
    json j;
    j["input"] = in.id();
    j["delta2"] = delta2;
    json layers = json::array();
    bool all_ok = true;
    for (const LayerConvexityResult& r : check_layer_pseudoconvexity(dm, prof, delta2)) {
        json lj;
        lj["k"] = r.k;
        lj["size"] = r.size;
        lj["beta_min"] = r.beta_min;
        lj["pseudo_ok"] = r.pseudo_ok;
        lj["set_diam"] = r.set_diam;
        lj["diam_bound"] = r.diam_bound;
        lj["diam_ok"] = r.diam_ok;
        if (r.witness) {
            lj["witness"] = {{"x", g.label((*r.witness)[0])},
                             {"y", g.label((*r.witness)[1])},
                             {"z", g.label((*r.witness)[2])}};
        }
        all_ok = all_ok && r.pseudo_ok && r.diam_ok;
        layers.push_back(std::move(lj));
    }
    j["layers"] = std::move(layers);
    int disk_failures = 0;
    for (const DiskConvexityResult& r : check_disk_pseudoconvexity(dm, prof, delta2, samples, seed)) {
        if (!r.ok) ++disk_failures;
    }
    j["disk_samples"] = samples;
    j["disk_failures"] = disk_failures;
    all_ok = all_ok && disk_failures == 0;
    j["all_ok"] = all_ok;
    emit(out, j);
    return all_ok ? 0 : 1;
}

int cmd_verify(const InputOpts& in, bool use_corpus, const SuiteConfig& cfg, const std::string& out_path,
               std::ostream& out) {
    json report;
    bool ok;
    if (use_corpus) {
        CorpusReport rep = run_corpus(default_corpus(), cfg);
        report = rep.to_json();
        ok = rep.all_pass();
    } else {
        Graph g = in.load();
        VerificationReport rep = run_suite(g, in.id(), cfg);
        report = rep.to_json();
        ok = rep.all_pass();
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) fail(ErrorCode::BadInput, "cannot open output file: " + out_path);
        f << report.dump(2) << '\n';
        out << (ok ? "all checks passed" : "CHECK FAILURES") << "; report written to " << out_path << "\n";
    } else {
        emit(out, report);
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"eccentricity terrain analysis for (hyperbolic) graphs"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: HYPERTERRAIN_THREADS or hardware)");
    bool force = false;
    app.add_flag("--force", force, "lift the exact-oracle size caps");
    OracleLimits limits;

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph as edge-list text");
    std::string gen_desc, gen_out;
    gen->add_option("descriptor", gen_desc,
                    "family descriptor: path(n), cycle(n), complete(n), grid(r,c), "
                    "random_tree(n,seed), gnm_connected(n,m,seed), fig3(k,p)")
        ->required();
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // stats
    auto* stats = app.add_subcommand("stats", "n, m, radius, diameter, center, hyperbolicity, layers");
    InputOpts stats_in;
    add_input_opts(stats, stats_in);
    std::string stats_format = "text";
    stats->add_option("--format", stats_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // ecc
    auto* ecc = app.add_subcommand("ecc", "per-vertex eccentricities, exact or approximate");
    InputOpts ecc_in;
    add_input_opts(ecc, ecc_in);
    std::string ecc_mode = "exact";
    ecc->add_option("--mode", ecc_mode, "exact|pair|tree|tree-fast")
        ->check(CLI::IsMember({"exact", "pair", "tree", "tree-fast"}));
    int ecc_k = 1;
    ecc->add_option("--k", ecc_k, "tree-fast sweep parameter (default 1)");
    int ecc_start = 0;
    ecc->add_option("--start", ecc_start, "sweep start vertex id (dense, default 0)");
    bool with_exact = false;
    ecc->add_flag("--with-exact", with_exact, "add exact values and per-vertex error");
    std::string ecc_format = "tsv";
    ecc->add_option("--format", ecc_format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));

    // terrain
    auto* terrain = app.add_subcommand("terrain", "segment the canonical shortest path between two vertices");
    InputOpts terrain_in;
    add_input_opts(terrain, terrain_in);
    Label terr_from = 0, terr_to = 0;
    terrain->add_option("--from", terr_from, "start vertex label")->required();
    terrain->add_option("--to", terr_to, "end vertex label")->required();
    std::string terr_format = "text";
    terrain->add_option("--format", terr_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // convexity
    auto* cvx = app.add_subcommand("convexity", "pseudoconvexity checks for layer sets and sampled disks");
    InputOpts cvx_in;
    add_input_opts(cvx, cvx_in);
    int cvx_delta2 = -1;
    cvx->add_option("--delta2", cvx_delta2, "doubled hyperbolicity bound (default: exact oracle)");
    int cvx_samples = 200;
    cvx->add_option("--samples", cvx_samples, "sampled disks");
    std::uint64_t cvx_seed = 1;
    cvx->add_option("--seed", cvx_seed, "sampling seed");

    // verify
    auto* verify = app.add_subcommand("verify", "run the theorem-check suite against the exact oracle");
    InputOpts verify_in;
    add_input_opts(verify, verify_in);
    bool corpus = false;
    verify->add_flag("--corpus", corpus, "run the default generated corpus instead of one input");
    SuiteConfig cfg;
    verify->add_option("--seed", cfg.seed, "suite seed (default 1)");
    verify->add_option("--samples", cfg.sample_budget, "samples per sampled check");
    verify->add_option("--path-samples", cfg.path_samples, "sampled shortest paths per graph");
    std::string verify_out;
    verify->add_option("--out", verify_out, "write the JSON report to a file");

    // global options (--threads, --force) may appear after the subcommand
    for (CLI::App* sub : {gen, stats, ecc, terrain, cvx, verify}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 pops from the back
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        help << app.help();
        out << help.str();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (force) {
        limits.matrix_cap = 1 << 30;
        limits.delta_cap = 1 << 30;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_desc, gen_out, out);
        if (stats->parsed()) return cmd_stats(stats_in, stats_format, limits, threads, out);
        if (ecc->parsed()) {
            return cmd_ecc(ecc_in, ecc_mode, ecc_k, ecc_start, with_exact, ecc_format, limits, threads, out);
        }
        if (terrain->parsed()) {
            return cmd_terrain(terrain_in, terr_from, terr_to, terr_format, limits, threads, out);
        }
        if (cvx->parsed()) {
            std::optional<int> d2;
            if (cvx_delta2 >= 0) d2 = cvx_delta2;
            return cmd_convexity(cvx_in, d2, cvx_samples, cvx_seed, limits, threads, out);
        }
        if (verify->parsed()) {
            cfg.threads = threads;
            cfg.limits = limits;
            return cmd_verify(verify_in, corpus, cfg, verify_out, out);
        }
    } catch (const Error& e) {
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace hyperterrain
