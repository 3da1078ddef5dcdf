#include "hyperterrain/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "hyperterrain/approx.hpp"
#include "hyperterrain/convexity.hpp"
#include "hyperterrain/extremal.hpp"
#include "hyperterrain/parallel.hpp"
#include "hyperterrain/path_space.hpp"
#include "hyperterrain/prng.hpp"
#include "hyperterrain/terrain.hpp"

namespace hyperterrain {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// metric access: matrix-backed for the forward pass, fresh-BFS-backed for
// witness re-verification (no cached state from the failing run)
// ---------------------------------------------------------------------------

struct Ctx;

struct MatrixMetric {
    const DistanceMatrix& dm;
    const EccentricityProfile& prof;
    const LocalityMap& locmap;
    const std::vector<std::int32_t>& to_center;
    int delta2_;

    int d(Vertex u, Vertex v) const { return dm.at(u, v); }
    int e(Vertex v) const { return prof.ecc[v]; }
    int rad() const { return prof.rad; }
    int diam() const { return prof.diam; }
    int delta2() const { return delta2_; }
    int loc(Vertex v) const { return locmap.loc[v]; }
    int dist_center(Vertex v) const { return to_center[v]; }
    bool central(Vertex v) const { return prof.ecc[v] == prof.rad; }
};

struct FreshMetric {
    const Graph& g;
    mutable std::map<Vertex, std::vector<std::int32_t>> rows;
    mutable std::optional<EccentricityProfile> prof;
    mutable std::optional<LocalityMap> locmap;
    mutable std::optional<std::vector<std::int32_t>> to_center;
    mutable std::optional<int> d2;

    const std::vector<std::int32_t>& row(Vertex s) const {
        auto it = rows.find(s);
        if (it == rows.end()) it = rows.emplace(s, bfs(g, s).dist).first;
        return it->second;
    }
    const EccentricityProfile& profile() const {
        if (!prof) prof = eccentricity_profile(g, OracleLimits{1 << 30, 1 << 30});
        return *prof;
    }
    int d(Vertex u, Vertex v) const { return row(u)[v]; }
    int e(Vertex v) const { return profile().ecc[v]; }
    int rad() const { return profile().rad; }
    int diam() const { return profile().diam; }
    int delta2() const {
        if (!d2) d2 = hyperbolicity_exact(g, OracleLimits{1 << 30, 1 << 30}).delta2;
        return *d2;
    }
    int loc(Vertex v) const {
        if (!locmap) locmap = locality_map(g, profile());
        return locmap->loc[v];
    }
    int dist_center(Vertex v) const {
        if (!to_center) to_center = bfs_multi(g, profile().center);
        return (*to_center)[v];
    }
    bool central(Vertex v) const { return e(v) == rad(); }
};

// ---------------------------------------------------------------------------
// shared predicates (true = inequality respected)
// ---------------------------------------------------------------------------

template <class M>
bool dual1_ok(const M& m, Vertex x, Vertex y, Vertex c, Vertex v) {
    const int d2 = m.delta2();
    const int gp2 = m.d(v, x) + m.d(x, y) - m.d(v, y);  // 2*(v|y)_x
    const int dcv = m.d(c, v);
    bool ok;
    if (2 * m.d(x, c) <= gp2) {
        ok = dcv <= m.d(x, v) - m.d(x, c) + d2 && 2 * dcv <= 2 * m.d(x, v) + d2;
        if (ok && dcv == m.e(c)) {
            ok = m.e(c) <= m.e(x) - m.d(x, c) + d2 && 2 * m.e(c) <= 2 * m.e(x) + d2;
        }
    } else {
        ok = dcv <= m.d(y, v) - m.d(y, c) + d2 && 2 * dcv <= 2 * m.d(y, v) + d2;
        if (ok && dcv == m.e(c)) {
            ok = m.e(c) <= m.e(y) - m.d(y, c) + d2 && 2 * m.e(c) <= 2 * m.e(y) + d2;
        }
    }
    return ok;
}

template <class M>
bool dual2_ok(const M& m, Vertex x, Vertex y, Vertex c, Vertex v) {
    return m.d(c, v) <= std::max(m.d(x, v), m.d(y, v)) - std::min(m.d(x, c), m.d(y, c)) + m.delta2();
}

template <class M>
bool dual3_ok(const M& m, Vertex x, Vertex y, Vertex c, Vertex v) {
    const int d2 = m.delta2();
    const int hi = std::max(m.d(x, v), m.d(y, v));
    if (2 * m.d(c, v) > 2 * hi + d2) return false;
    const int dxy = m.d(x, y), dxc = m.d(x, c), dyc = m.d(y, c);
    if (dxy >= 2 * d2 && dxc >= d2 && dyc >= d2 && m.d(c, v) > hi) return false;
    if (dxy >= 2 * d2 + 2 && dxc > d2 && dyc > d2 && m.d(c, v) >= hi) return false;
    return true;
}

template <class M>
bool dual4_ok(const M& m, Vertex x, Vertex y, Vertex c) {
    const int d2 = m.delta2();
    const int hi = std::max(m.e(x), m.e(y));
    if (2 * m.e(c) > 2 * hi + d2) return false;
    const int dxy = m.d(x, y), dxc = m.d(x, c), dyc = m.d(y, c);
    if (dxy >= 2 * d2 && dxc >= d2 && dyc >= d2 && m.e(c) > hi) return false;
    if (dxy >= 2 * d2 + 2 && dxc > d2 && dyc > d2 && m.e(c) >= hi) return false;
    return true;
}

template <class M>
bool dual5_ok(const M& m, Vertex x, Vertex y, Vertex c) {
    const int d2 = m.delta2();
    if (m.e(c) >= std::max(m.e(x), m.e(y))) return m.d(x, y) <= 2 * d2 + 1;
    return true;
}

// TER predicates evaluate one path; they return false and fill `info` on the
// first violated instance of their clause family.

template <class M>
bool in_interval(const M& m, Vertex x, Vertex y, Vertex c) {
    return m.d(x, c) + m.d(c, y) == m.d(x, y);
}

struct PathView {
    const PathInGraph& path;
    PathKind kind;
};

template <class M>
PathKind kind_of(const M& m, const PathInGraph& p) {
    const int e_end = m.e(p.back());
    bool strict = true, weak = true;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        const int e = m.e(p.vertices[i]);
        if (e < e_end) weak = false;
        if (e <= e_end) strict = false;
    }
    if (!weak) return PathKind::General;
    return strict ? PathKind::StrictEndMinimal : PathKind::EndMinimal;
}

struct SegView {
    std::vector<EdgeClass> classes;
    std::vector<TerrainSegment> segments;
    int up = 0, hor = 0, down = 0;
};

template <class M>
SegView segments_of(const M& m, const PathInGraph& p) {
    // mirrors terrain::segment_path but against the metric interface
    SegView s;
    const int len = p.length();
    s.classes.reserve(len);
    for (int i = 0; i < len; ++i) {
        const int eu = m.e(p.vertices[i]);
        const int ev = m.e(p.vertices[i + 1]);
        EdgeClass c = eu < ev ? EdgeClass::Up : (eu == ev ? EdgeClass::Horizontal : EdgeClass::Down);
        s.classes.push_back(c);
        if (c == EdgeClass::Up) ++s.up;
        else if (c == EdgeClass::Horizontal) ++s.hor;
        else ++s.down;
    }
    for (int i = 0; i < len;) {
        int j = i;
        while (j < len && s.classes[j] == s.classes[i]) ++j;
        TerrainSegment seg;
        seg.start = i;
        seg.length = j - i;
        if (s.classes[i] == EdgeClass::Up) seg.label = SegmentLabel::UpHill;
        else if (s.classes[i] == EdgeClass::Down) seg.label = SegmentLabel::DownHill;
        else {
            seg.label = SegmentLabel::Plain;
            if (i > 0 && j < len) {
                const bool in_up = s.classes[i - 1] == EdgeClass::Up;
                const bool out_down = s.classes[j] == EdgeClass::Down;
                if (in_up && out_down) seg.plain_kind = PlainKind::Plateau;
                else if (!in_up && !out_down) seg.plain_kind = PlainKind::Valley;
                else seg.plain_kind = PlainKind::Terrace;
            } else {
                seg.plain_kind = PlainKind::Boundary;
            }
        }
        s.segments.push_back(seg);
        i = j;
    }
    return s;
}

template <class M>
bool ter1_ok(const M& m, const PathInGraph& p, json* info) {
    const int d2 = m.delta2();
    SegView s = segments_of(m, p);
    for (const TerrainSegment& seg : s.segments) {
        if (seg.label != SegmentLabel::Plain) continue;
        const int w = seg.length;
        if (w > 2 * d2 + 1) {
            if (info) *info = {{"clause", "plain_width"}, {"width", w}, {"start", seg.start}};
            return false;
        }
        if (seg.plain_kind == PlainKind::Terrace && (d2 == 0 || w > 2 * d2 - 1)) {
            if (info) *info = {{"clause", "terrace_width"}, {"width", w}, {"start", seg.start}};
            return false;
        }
        if (seg.plain_kind == PlainKind::Plateau && (d2 <= 1 || w > 2 * d2 - 3)) {
            if (info) *info = {{"clause", "plateau_width"}, {"width", w}, {"start", seg.start}};
            return false;
        }
    }
    return true;
}

template <class M>
bool ter2_ok(const M& m, const PathInGraph& p, json* info) {
    const int d2 = m.delta2();
    const int emin = std::min(m.e(p.front()), m.e(p.back()));
    SegView s = segments_of(m, p);
    for (const TerrainSegment& seg : s.segments) {
        if (seg.label != SegmentLabel::Plain) continue;
        const int e_plain = m.e(p.vertices[seg.start]);
        if (2 * e_plain <= 2 * emin + d2) continue;  // not elevated
        if (seg.length > d2) {
            if (info) *info = {{"clause", "elevated_plain_width"}, {"width", seg.length}, {"start", seg.start}};
            return false;
        }
        if (seg.plain_kind == PlainKind::Plateau && seg.length > d2 - 2) {
            if (info) *info = {{"clause", "elevated_plateau_width"}, {"width", seg.length}, {"start", seg.start}};
            return false;
        }
    }
    // delta = 1 special case: strict end-minimal paths carry no plateau at all
    if (d2 == 2 && kind_of(m, p) == PathKind::StrictEndMinimal) {
        for (const TerrainSegment& seg : s.segments) {
            if (seg.plain_kind == PlainKind::Plateau) {
                if (info) *info = {{"clause", "plateau_on_strict_path_delta1"}, {"start", seg.start}};
                return false;
            }
        }
    }
    return true;
}

template <class M>
bool ter3_ok(const M& m, const PathInGraph& p, json* info) {
    const int d2 = m.delta2();
    const int len = p.length();
    const int emin = std::min(m.e(p.front()), m.e(p.back()));
    // interior window: both endpoints further than 2*delta away
    const int lo = d2 + 1, hi = len - d2 - 1;
    if (lo > hi) return true;
    std::map<int, std::pair<int, int>> span;  // ecc -> (min pos, max pos)
    for (int i = lo; i <= hi; ++i) {
        const int e = m.e(p.vertices[i]);
        if (e < emin) continue;
        auto [it, fresh] = span.try_emplace(e, std::pair<int, int>{i, i});
        if (!fresh) it->second.second = i;
    }
    for (const auto& [e, mm] : span) {
        if (mm.second - mm.first > d2) {
            if (info) *info = {{"clause", "equal_ecc_distance"}, {"ecc", e}, {"i", mm.first}, {"j", mm.second}};
            return false;
        }
    }
    return true;
}

template <class M>
bool ter4_ok(const M& m, const PathInGraph& p, json* info) {
    if (kind_of(m, p) == PathKind::General) return true;
    const int d2 = m.delta2();
    SegView s = segments_of(m, p);
    for (const TerrainSegment& seg : s.segments) {
        if (seg.label == SegmentLabel::UpHill && 2 * seg.length > d2) {
            if (info) *info = {{"clause", "uphill_height"}, {"height", seg.length}, {"start", seg.start}};
            return false;
        }
    }
    return true;
}

template <class M>
bool ter5_ok(const M& m, const PathInGraph& p, json* info) {
    if (kind_of(m, p) == PathKind::General) return true;
    const int d2 = m.delta2();
    const int len = p.length();
    const int e_front = m.e(p.front());
    for (int i = 0; i <= len; ++i) {
        if (len - i <= d2) continue;  // needs d(c, x) > 2*delta
        const int ec = m.e(p.vertices[i]);
        if (2 * ec > 2 * e_front + d2 || ec > e_front - i + d2) {
            if (info) *info = {{"clause", "far_vertex_ecc"}, {"i", i}, {"ecc", ec}};
            return false;
        }
    }
    return true;
}

template <class M>
bool ter6_ok(const M& m, const PathInGraph& p, json* info) {
    if (kind_of(m, p) == PathKind::General) return true;
    const int d2 = m.delta2();
    const int len = p.length();
    if (len <= 2 * d2 + 1) return true;
    int prefix_min = m.e(p.vertices[0]);
    std::vector<int> mins(len + 1);
    for (int i = 0; i <= len; ++i) {
        prefix_min = std::min(prefix_min, m.e(p.vertices[i]));
        mins[i] = prefix_min;
    }
    for (int i = d2 + 1; i <= len - d2 - 1; ++i) {
        if (m.e(p.vertices[i]) >= mins[i - d2 - 1]) {
            if (info) *info = {{"clause", "pseudodescending"}, {"i", i}};
            return false;
        }
    }
    return true;
}

template <class M>
bool ter7_ok(const M& m, const PathInGraph& p, json* info) {
    const int d2 = m.delta2();
    const PathKind kind = kind_of(m, p);
    SegView s = segments_of(m, p);
    const int len = p.length();
    if (kind == PathKind::StrictEndMinimal && 2 * s.up + s.hor > std::max(0, 2 * d2 - 1)) {
        if (info) *info = {{"clause", "2u_plus_h_strict"}, {"value", 2 * s.up + s.hor}};
        return false;
    }
    if (kind == PathKind::EndMinimal && 2 * s.up + s.hor > 2 * d2 + 1) {
        if (info) *info = {{"clause", "2u_plus_h_endmin"}, {"value", 2 * s.up + s.hor}};
        return false;
    }
    // prefix bound
    const int e_back = m.e(p.back());
    int up = 0, hor = 0;
    for (int i = 1; i <= len; ++i) {
        if (s.classes[i - 1] == EdgeClass::Up) ++up;
        else if (s.classes[i - 1] == EdgeClass::Horizontal) ++hor;
        const bool cond_a = 2 * m.e(p.vertices[i]) > 2 * e_back + d2;
        const bool cond_b = kind != PathKind::General && len - i > d2;
        if ((cond_a || cond_b) && 2 * up + hor > d2) {
            if (info) *info = {{"clause", "2u_plus_h_prefix"}, {"i", i}, {"value", 2 * up + hor}};
            return false;
        }
    }
    return true;
}

template <class M>
bool ter8_ok(const M& m, const PathInGraph& p, json* info) {
    const int d2 = m.delta2();
    const PathKind kind = kind_of(m, p);
    const int len = p.length();
    const int e_front = m.e(p.front());
    const int e_back = m.e(p.back());
    if (kind == PathKind::StrictEndMinimal && len > e_front - e_back + std::max(0, 2 * d2 - 1)) {
        if (info) *info = {{"clause", "length_strict"}, {"length", len}};
        return false;
    }
    if (kind == PathKind::EndMinimal && len > e_front - e_back + 2 * d2 + 1) {
        if (info) *info = {{"clause", "length_endmin"}, {"length", len}};
        return false;
    }
    for (int i = 1; i <= len; ++i) {
        const int e_i = m.e(p.vertices[i]);
        const bool cond_a = 2 * e_i > 2 * e_back + d2;
        const bool cond_b = kind != PathKind::General && len - i > d2;
        if ((cond_a || cond_b) && i > e_front - e_i + d2) {
            if (info) *info = {{"clause", "prefix_length"}, {"i", i}};
            return false;
        }
    }
    return true;
}

template <class M>
bool ter9_ok(const M& m, const PathInGraph& p, json* info) {
    const int d2 = m.delta2();
    const PathKind kind = kind_of(m, p);
    const bool to_central = m.central(p.back());
    int cnt = 0, outside_cdelta = 0, far = 0;
    for (Vertex v : p.vertices) {
        if (m.loc(v) <= 1) continue;
        ++cnt;
        if (2 * (m.e(v) - m.rad()) > d2) ++outside_cdelta;
        if (m.dist_center(v) > d2) ++far;
    }
    int bound = 4 * d2 + 1;  // general path: 8*delta + 1
    const char* clause = "loc_count_general";
    if (kind == PathKind::StrictEndMinimal) {
        bound = to_central ? std::max(0, 2 * d2 - 1) : 2 * d2;
        clause = to_central ? "loc_count_strict_to_center" : "loc_count_strict";
    } else if (kind == PathKind::EndMinimal) {
        bound = 2 * d2 + 2;
        clause = "loc_count_endmin";
    }
    if (cnt > bound) {
        if (info) *info = {{"clause", clause}, {"count", cnt}, {"bound", bound}};
        return false;
    }
    if (to_central) {
        if (outside_cdelta > d2) {
            if (info) *info = {{"clause", "loc_count_outside_cdelta"}, {"count", outside_cdelta}};
            return false;
        }
        if (far > d2 + 1) {
            if (info) *info = {{"clause", "loc_count_far_from_center"}, {"count", far}};
            return false;
        }
        // any shortest path into the center either is short or dips below
        // e(front) at hop 2*delta + 1
        if (p.length() > 2 * d2 + 1 && m.e(p.vertices[d2 + 1]) >= m.e(p.front())) {
            if (info) *info = {{"clause", "locality_dip"}, {"i", d2 + 1}};
            return false;
        }
    }
    return true;
}

// APX predicates: side sandwiches per method against the exact eccentricity.

template <class M>
bool apx_pair_ok(const M& m, Vertex v, int est) {
    const int err = m.e(v) - est;
    return err >= 0 && err <= m.delta2();
}

template <class M>
bool apx_tree_middle_ok(const M& m, Vertex v, int est) {
    const int err = est - m.e(v);
    return err >= 0 && err <= 2 * m.delta2() + 1;
}

// bound: 6*delta+1-k for k <= 2*delta, 4*delta+1 when the sweep certified a
// mutually distant pair instead.
template <class M>
bool apx_tree_fast_ok(const M& m, Vertex v, int est, int k, bool pair_mutually_distant, bool* applicable) {
    const int d2 = m.delta2();
    int bound;
    if (k <= d2) bound = 3 * d2 + 1 - k;
    else if (pair_mutually_distant) bound = 2 * d2 + 1;
    else {
        *applicable = false;
        return true;
    }
    *applicable = true;
    const int err = est - m.e(v);
    return err >= 0 && err <= bound;
}

}  // namespace

// ---------------------------------------------------------------------------
// per-graph context
// ---------------------------------------------------------------------------

namespace {

struct Check {
    CheckOutcome out;
    explicit Check(const std::string& id) { out.check_id = id; }
    bool failed() const { return out.status == CheckStatus::Fail; }
    void tally(std::int64_t k = 1) { out.tested_instances += k; }
    void violation(json w) {
        if (!failed()) {
            out.status = CheckStatus::Fail;
            out.witness = std::move(w);
        }
    }
};

struct Ctx {
    const Graph& g;
    std::string graph_id;
    const SuiteConfig& cfg;
    DistanceMatrix dm;
    EccentricityProfile prof;
    LocalityMap loc;
    HyperbolicityCertificate hyp;
    int d2 = 0;
    std::vector<std::int32_t> dist_center;
    std::vector<std::int32_t> dist_c2d;
    std::vector<Vertex> set_c2d;
    std::vector<Vertex> starts;
    std::vector<PathInGraph> center_paths;
    std::vector<PathInGraph> sampled_paths;
    std::vector<LayerConvexityResult> layer_results;

    int n() const { return g.n(); }
    int d(Vertex u, Vertex v) const { return dm.at(u, v); }
    int e(Vertex v) const { return prof.ecc[v]; }

    MatrixMetric metric() const { return MatrixMetric{dm, prof, loc, dist_center, d2}; }

    SplitMix64 rng(const std::string& stream) const {
        return SplitMix64(mix64(mix64(cfg.seed, hash_string(graph_id)), hash_string(stream)));
    }

    json labels_of(const PathInGraph& p) const {
        json arr = json::array();
        for (Vertex v : p.vertices) arr.push_back(g.label(v));
        return arr;
    }
};

Vertex argmax_row(std::span<const std::uint16_t> row) {
    Vertex best = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(row.size()); ++v) {
        if (row[v] > row[best]) best = v;
    }
    return best;
}

// Matrix-side replica of mutually_distant_pair: terminal pair of the
// furthest-vertex iteration started at z.
std::pair<Vertex, Vertex> matrix_sweep(const Ctx& ctx, Vertex z) {
    Vertex prev = z;
    Vertex cur = argmax_row(ctx.dm.row(z));
    int last = ctx.d(z, cur);
    for (int iter = 0; iter <= ctx.n(); ++iter) {
        auto row = ctx.dm.row(cur);
        Vertex nxt = argmax_row(row);
        if (row[nxt] == last) return {prev, cur};
        prev = cur;
        cur = nxt;
        last = row[nxt];
    }
    return {prev, cur};
}

Ctx build_ctx(const Graph& g, const std::string& graph_id, const SuiteConfig& cfg) {
    Ctx ctx{g, graph_id, cfg,
            all_pairs_distances(g, cfg.limits, cfg.threads),
            {}, {}, {}, 0, {}, {}, {}, {}, {}, {}, {}};
    ctx.prof = eccentricity_profile(g, ctx.dm);
    ctx.loc = locality_map(g, ctx.prof);
    ctx.hyp = hyperbolicity_exact(ctx.dm, cfg.limits, cfg.threads);
    ctx.d2 = ctx.hyp.delta2;
    ctx.dist_center = bfs_multi(g, ctx.prof.center);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (ctx.prof.layer[v] <= ctx.d2) ctx.set_c2d.push_back(v);  // e <= rad + 2*delta
    }
    ctx.dist_c2d = bfs_multi(g, ctx.set_c2d);

    ctx.starts.push_back(0);
    SplitMix64 srng = ctx.rng("starts");
    for (int i = 0; i < cfg.extra_starts; ++i) {
        Vertex s = static_cast<Vertex>(srng.below(g.n()));
        if (std::find(ctx.starts.begin(), ctx.starts.end(), s) == ctx.starts.end()) ctx.starts.push_back(s);
    }

    // canonical strict end-minimal path from every vertex to its nearest
    // central vertex (smallest id on ties)
    for (Vertex v = 0; v < g.n(); ++v) {
        Vertex best = ctx.prof.center[0];
        for (Vertex c : ctx.prof.center) {
            if (ctx.d(v, c) < ctx.d(v, best)) best = c;
        }
        ctx.center_paths.push_back(canonical_path_from_matrix(g, ctx.dm, v, best));
    }
    SplitMix64 prng = ctx.rng("paths");
    for (int i = 0; i < cfg.path_samples; ++i) {
        Vertex x = static_cast<Vertex>(prng.below(g.n()));
        Vertex y = static_cast<Vertex>(prng.below(g.n()));
        if (x == y) y = static_cast<Vertex>((y + 1) % g.n());
        ctx.sampled_paths.push_back(sample_shortest_path(g, ctx.dm, x, y, prng));
    }

    ctx.layer_results = check_layer_pseudoconvexity(ctx.dm, ctx.prof, ctx.d2);
    return ctx;
}

// Feeds every universe path, forward and reversed, to fn (which returns false
// to abort). Returns true when the enumerated portion was complete, i.e. all
// shortest paths of every pair were visited within the budget.
bool for_each_universe_path(const Ctx& ctx, const std::function<bool(const PathInGraph&)>& fn) {
    PathInGraph scratch;
    auto feed = [&](const PathInGraph& p) -> bool {
        if (!fn(p)) return false;
        if (p.vertices.size() > 1) {
            scratch.vertices.assign(p.vertices.rbegin(), p.vertices.rend());
            if (!fn(scratch)) return false;
        }
        return true;
    };

    for (const PathInGraph& p : ctx.center_paths) {
        if (!feed(p)) return true;
    }
    for (const PathInGraph& p : ctx.sampled_paths) {
        if (!feed(p)) return true;
    }
    if (ctx.n() > ctx.cfg.path_enum_max_n) return false;
    std::int64_t budget = ctx.cfg.path_enum_budget;
    bool complete = true;
    for (Vertex x = 0; x < ctx.n() && complete; ++x) {
        for (Vertex y = x + 1; y < ctx.n() && complete; ++y) {
            bool done = for_each_shortest_path(ctx.g, ctx.dm, x, y, budget,
                                               [&](const PathInGraph& p) { return feed(p); });
            if (!done) complete = false;
        }
    }
    return complete;
}

// ---------------------------------------------------------------------------
// generic quantifier driver for (x, y, c in I(x,y) [, v]) checks
// ---------------------------------------------------------------------------

template <typename Body>  // Body(x, y, c, v) with v = -1 when with_v is false
void for_interval_tuples(const Ctx& ctx, Check& chk, bool with_v, Body body) {
    const int n = ctx.n();
    const double space =
        static_cast<double>(n) * n * n * (with_v ? static_cast<double>(n) : 1.0);
    if (space <= static_cast<double>(ctx.cfg.exhaustive_limit)) {
        for (Vertex x = 0; x < n && !chk.failed(); ++x) {
            for (Vertex y = x; y < n && !chk.failed(); ++y) {
                const int dxy = ctx.d(x, y);
                for (Vertex c = 0; c < n && !chk.failed(); ++c) {
                    if (ctx.d(x, c) + ctx.d(c, y) != dxy) continue;
                    if (with_v) {
                        for (Vertex v = 0; v < n && !chk.failed(); ++v) body(x, y, c, v);
                    } else {
                        body(x, y, c, -1);
                    }
                }
            }
        }
        return;
    }
    chk.out.exhaustive = false;
    SplitMix64 rng = ctx.rng(chk.out.check_id);
    std::vector<Vertex> ivl;
    for (std::int64_t s = 0; s < ctx.cfg.sample_budget && !chk.failed(); ++s) {
        Vertex x = static_cast<Vertex>(rng.below(n));
        Vertex y = static_cast<Vertex>(rng.below(n));
        if (x > y) std::swap(x, y);
        const int dxy = ctx.d(x, y);
        ivl.clear();
        for (Vertex c = 0; c < n; ++c) {
            if (ctx.d(x, c) + ctx.d(c, y) == dxy) ivl.push_back(c);
        }
        const Vertex c = ivl[rng.below(ivl.size())];
        const Vertex v = with_v ? static_cast<Vertex>(rng.below(n)) : -1;
        body(x, y, c, v);
    }
}

json tuple_witness(const Ctx& ctx, std::initializer_list<std::pair<const char*, Vertex>> vs) {
    json w;
    for (const auto& [k, v] : vs) w["vertices"][k] = ctx.g.label(v);
    w["delta2"] = ctx.d2;
    return w;
}

// ---------------------------------------------------------------------------
// the checks
// ---------------------------------------------------------------------------

CheckOutcome check_dual1(Ctx& ctx) {
    Check chk("DUAL-1");
    MatrixMetric m = ctx.metric();
    for_interval_tuples(ctx, chk, true, [&](Vertex x, Vertex y, Vertex c, Vertex v) {
        chk.tally();
        if (!dual1_ok(m, x, y, c, v)) {
            chk.violation(tuple_witness(ctx, {{"x", x}, {"y", y}, {"c", c}, {"v", v}}));
        }
    });
    return chk.out;
}

CheckOutcome check_dual2(Ctx& ctx) {
    Check chk("DUAL-2");
    MatrixMetric m = ctx.metric();
    for_interval_tuples(ctx, chk, true, [&](Vertex x, Vertex y, Vertex c, Vertex v) {
        chk.tally();
        if (!dual2_ok(m, x, y, c, v)) {
            chk.violation(tuple_witness(ctx, {{"x", x}, {"y", y}, {"c", c}, {"v", v}}));
        }
    });
    return chk.out;
}

CheckOutcome check_dual3(Ctx& ctx) {
    Check chk("DUAL-3");
    MatrixMetric m = ctx.metric();
    for_interval_tuples(ctx, chk, true, [&](Vertex x, Vertex y, Vertex c, Vertex v) {
        chk.tally();
        if (!dual3_ok(m, x, y, c, v)) {
            chk.violation(tuple_witness(ctx, {{"x", x}, {"y", y}, {"c", c}, {"v", v}}));
        }
    });
    return chk.out;
}

CheckOutcome check_dual4(Ctx& ctx) {
    Check chk("DUAL-4");
    MatrixMetric m = ctx.metric();
    for_interval_tuples(ctx, chk, false, [&](Vertex x, Vertex y, Vertex c, Vertex) {
        chk.tally();
        if (!dual4_ok(m, x, y, c)) {
            chk.violation(tuple_witness(ctx, {{"x", x}, {"y", y}, {"c", c}}));
        }
    });
    return chk.out;
}

CheckOutcome check_dual5(Ctx& ctx) {
    Check chk("DUAL-5");
    MatrixMetric m = ctx.metric();
    for_interval_tuples(ctx, chk, false, [&](Vertex x, Vertex y, Vertex c, Vertex) {
        // slice S_{2*delta+1} from either endpoint
        if (ctx.d(x, c) != ctx.d2 + 1 && ctx.d(y, c) != ctx.d2 + 1) return;
        chk.tally();
        if (!dual5_ok(m, x, y, c)) {
            chk.violation(tuple_witness(ctx, {{"x", x}, {"y", y}, {"c", c}}));
        }
    });
    return chk.out;
}

CheckOutcome check_cvx1(Ctx& ctx) {
    Check chk("CVX-1");
    auto results = check_disk_pseudoconvexity(ctx.dm, ctx.prof, ctx.d2, ctx.cfg.disk_samples,
                                              mix64(ctx.cfg.seed, hash_string(ctx.graph_id)));
    for (const auto& r : results) {
        chk.tally();
        if (!r.ok) {
            json w = tuple_witness(ctx, {{"center", r.center}});
            w["radius"] = r.radius;
            w["beta_min"] = r.beta_min;
            if (r.witness) {
                w["vertices"]["x"] = ctx.g.label((*r.witness)[0]);
                w["vertices"]["y"] = ctx.g.label((*r.witness)[1]);
                w["vertices"]["z"] = ctx.g.label((*r.witness)[2]);
            }
            chk.violation(std::move(w));
            break;
        }
    }
    chk.out.exhaustive = false;  // sampled by construction
    return chk.out;
}

CheckOutcome check_cvx2(Ctx& ctx) {
    Check chk("CVX-2");
    for (const auto& r : ctx.layer_results) {
        chk.tally();
        if (!r.pseudo_ok) {
            json w;
            w["k"] = r.k;
            w["beta_min"] = r.beta_min;
            w["delta2"] = ctx.d2;
            if (r.witness) {
                w["vertices"]["x"] = ctx.g.label((*r.witness)[0]);
                w["vertices"]["y"] = ctx.g.label((*r.witness)[1]);
                w["vertices"]["z"] = ctx.g.label((*r.witness)[2]);
            }
            chk.violation(std::move(w));
            break;
        }
    }
    return chk.out;
}

CheckOutcome check_cvx3(Ctx& ctx) {
    Check chk("CVX-3");
    SplitMix64 rng = ctx.rng("CVX-3");
    chk.out.exhaustive = false;
    for (int i = 0; i < ctx.cfg.disk_pair_samples && !chk.failed(); ++i) {
        auto draw_disk = [&](Vertex& center, int& radius) {
            center = static_cast<Vertex>(rng.below(ctx.n()));
            radius = static_cast<int>(rng.below(std::max(1, ctx.e(center))));
            std::vector<Vertex> set;
            auto row = ctx.dm.row(center);
            for (Vertex v = 0; v < ctx.n(); ++v) {
                if (row[v] <= radius) set.push_back(v);
            }
            return set;
        };
        Vertex c1, c2;
        int r1, r2;
        std::vector<Vertex> s1 = draw_disk(c1, r1);
        std::vector<Vertex> s2 = draw_disk(c2, r2);
        PseudoconvexityReport b1 = pseudoconvexity_beta(ctx.dm, s1, ctx.n());
        PseudoconvexityReport b2 = pseudoconvexity_beta(ctx.dm, s2, ctx.n());

        // pseudoconvexity implies quasiconvexity at the same parameter
        std::vector<std::int32_t> ds1 = bfs_multi(ctx.g, s1);
        const int q1 = quasiconvexity_eps(ctx.dm, ds1, s1, ctx.n());
        chk.tally();
        if (q1 > b1.beta_min) {
            json w = tuple_witness(ctx, {{"center", c1}});
            w["clause"] = "quasi_le_pseudo";
            w["radius"] = r1;
            w["eps"] = q1;
            w["beta_min"] = b1.beta_min;
            chk.violation(std::move(w));
            break;
        }

        std::vector<Vertex> inter;
        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(inter));
        if (inter.empty()) continue;
        PseudoconvexityReport bi = pseudoconvexity_beta(ctx.dm, inter, ctx.n());
        chk.tally();
        if (bi.beta_min > std::max(b1.beta_min, b2.beta_min)) {
            json w;
            w["clause"] = "intersection_closure";
            w["disk1"] = {{"center", ctx.g.label(c1)}, {"radius", r1}, {"beta", b1.beta_min}};
            w["disk2"] = {{"center", ctx.g.label(c2)}, {"radius", r2}, {"beta", b2.beta_min}};
            w["beta_intersection"] = bi.beta_min;
            if (bi.witness) {
                w["vertices"]["x"] = ctx.g.label((*bi.witness)[0]);
                w["vertices"]["y"] = ctx.g.label((*bi.witness)[1]);
                w["vertices"]["z"] = ctx.g.label((*bi.witness)[2]);
            }
            chk.violation(std::move(w));
        }
    }
    return chk.out;
}

CheckOutcome check_cvx4(Ctx& ctx) {
    Check chk("CVX-4");
    for (const auto& r : ctx.layer_results) {
        chk.tally();
        if (!r.diam_ok) {
            json w;
            w["k"] = r.k;
            w["set_diam"] = r.set_diam;
            w["bound"] = r.diam_bound;
            w["delta2"] = ctx.d2;
            chk.violation(std::move(w));
            break;
        }
    }
    return chk.out;
}

template <typename Pred>
CheckOutcome path_check(Ctx& ctx, const char* id, Pred pred) {
    Check chk(id);
    MatrixMetric m = ctx.metric();
    bool complete = for_each_universe_path(ctx, [&](const PathInGraph& p) {
        chk.tally();
        json info;
        if (!pred(m, p, &info)) {
            json w;
            w["path"] = ctx.labels_of(p);
            w["info"] = std::move(info);
            w["delta2"] = ctx.d2;
            chk.violation(std::move(w));
            return false;
        }
        return true;
    });
    chk.out.exhaustive = complete && !chk.failed();
    if (!complete && !chk.failed()) chk.out.note = "canonical + sampled paths only";
    return chk.out;
}

CheckOutcome check_ter1(Ctx& ctx) { return path_check(ctx, "TER-1", [](const MatrixMetric& m, const PathInGraph& p, json* i) { return ter1_ok(m, p, i); }); }
CheckOutcome check_ter2(Ctx& ctx) { return path_check(ctx, "TER-2", [](const MatrixMetric& m, const PathInGraph& p, json* i) { return ter2_ok(m, p, i); }); }
CheckOutcome check_ter3(Ctx& ctx) { return path_check(ctx, "TER-3", [](const MatrixMetric& m, const PathInGraph& p, json* i) { return ter3_ok(m, p, i); }); }
CheckOutcome check_ter4(Ctx& ctx) { return path_check(ctx, "TER-4", [](const MatrixMetric& m, const PathInGraph& p, json* i) { return ter4_ok(m, p, i); }); }
CheckOutcome check_ter5(Ctx& ctx) { return path_check(ctx, "TER-5", [](const MatrixMetric& m, const PathInGraph& p, json* i) { return ter5_ok(m, p, i); }); }
CheckOutcome check_ter6(Ctx& ctx) { return path_check(ctx, "TER-6", [](const MatrixMetric& m, const PathInGraph& p, json* i) { return ter6_ok(m, p, i); }); }
CheckOutcome check_ter7(Ctx& ctx) { return path_check(ctx, "TER-7", [](const MatrixMetric& m, const PathInGraph& p, json* i) { return ter7_ok(m, p, i); }); }
CheckOutcome check_ter8(Ctx& ctx) { return path_check(ctx, "TER-8", [](const MatrixMetric& m, const PathInGraph& p, json* i) { return ter8_ok(m, p, i); }); }
CheckOutcome check_ter9(Ctx& ctx) { return path_check(ctx, "TER-9", [](const MatrixMetric& m, const PathInGraph& p, json* i) { return ter9_ok(m, p, i); }); }

CheckOutcome check_ecc1(Ctx& ctx) {
    Check chk("ECC-1");
    for (Vertex x = 0; x < ctx.n() && !chk.failed(); ++x) {
        chk.tally();
        const int e = ctx.e(x);
        const int dc = ctx.dist_center[x];
        const int dc2 = ctx.dist_c2d[x];
        const bool ok = e >= dc2 + ctx.prof.rad && e <= dc2 + ctx.prof.rad + ctx.d2 &&
                        e <= dc + ctx.prof.rad && e >= dc + ctx.prof.rad - 2 * ctx.d2;
        if (!ok) {
            json w = tuple_witness(ctx, {{"x", x}});
            w["ecc"] = e;
            w["dist_center"] = dc;
            w["dist_c2delta"] = dc2;
            w["rad"] = ctx.prof.rad;
            chk.violation(std::move(w));
        }
    }
    return chk.out;
}

CheckOutcome check_ecc2(Ctx& ctx) {
    Check chk("ECC-2");
    for (Vertex x = 0; x < ctx.n() && !chk.failed(); ++x) {
        chk.tally();
        const int k = ctx.prof.layer[x];
        const int dc = ctx.dist_center[x];
        const int dc2 = ctx.dist_c2d[x];
        const bool ok = dc2 <= k && k <= dc && 2 * dc <= 2 * dc2 + 3 * ctx.d2;
        if (!ok) {
            json w = tuple_witness(ctx, {{"x", x}});
            w["layer"] = k;
            w["dist_center"] = dc;
            w["dist_c2delta"] = dc2;
            chk.violation(std::move(w));
        }
    }
    return chk.out;
}

CheckOutcome check_ecc3(Ctx& ctx) {
    Check chk("ECC-3");
    const int n = ctx.n();
    const double space = static_cast<double>(n) * n * n;
    if (space <= static_cast<double>(ctx.cfg.exhaustive_limit)) {
        for (Vertex x = 0; x < n && !chk.failed(); ++x) {
            auto dx = ctx.dm.row(x);
            const int ex = ctx.e(x);
            for (Vertex y = 0; y < n && !chk.failed(); ++y) {
                if (dx[y] != ex) continue;  // y in F(x)
                for (Vertex c = 0; c < n && !chk.failed(); ++c) {
                    if (ctx.d(y, c) + ctx.d(c, x) != dx[y]) continue;
                    const int k = ctx.d(y, c) - ctx.prof.rad;
                    if (k < 0) continue;
                    chk.tally();
                    if (ctx.e(c) > ctx.prof.rad + ctx.d2 + k) {
                        json w = tuple_witness(ctx, {{"x", x}, {"y", y}, {"c", c}});
                        w["k"] = k;
                        w["ecc_c"] = ctx.e(c);
                        chk.violation(std::move(w));
                    }
                }
            }
        }
    } else {
        chk.out.exhaustive = false;
        SplitMix64 rng = ctx.rng("ECC-3");
        std::vector<Vertex> pool;
        for (std::int64_t s = 0; s < ctx.cfg.sample_budget && !chk.failed(); ++s) {
            const Vertex x = static_cast<Vertex>(rng.below(n));
            pool.clear();
            auto dx = ctx.dm.row(x);
            const int ex = ctx.e(x);
            for (Vertex v = 0; v < n; ++v) {
                if (dx[v] == ex) pool.push_back(v);
            }
            const Vertex y = pool[rng.below(pool.size())];
            pool.clear();
            for (Vertex c = 0; c < n; ++c) {
                if (ctx.d(y, c) + ctx.d(c, x) == ex && ctx.d(y, c) >= ctx.prof.rad) pool.push_back(c);
            }
            if (pool.empty()) continue;
            const Vertex c = pool[rng.below(pool.size())];
            const int k = ctx.d(y, c) - ctx.prof.rad;
            chk.tally();
            if (ctx.e(c) > ctx.prof.rad + ctx.d2 + k) {
                json w = tuple_witness(ctx, {{"x", x}, {"y", y}, {"c", c}});
                w["k"] = k;
                w["ecc_c"] = ctx.e(c);
                chk.violation(std::move(w));
            }
        }
    }
    return chk.out;
}

CheckOutcome check_ecc4(Ctx& ctx) {
    Check chk("ECC-4");
    std::set<std::pair<Vertex, Vertex>> seen;
    for (Vertex z : ctx.starts) {
        auto [x, y] = matrix_sweep(ctx, z);
        if (x > y) std::swap(x, y);
        if (!seen.insert({x, y}).second) continue;
        const int dxy = ctx.d(x, y);
        if (chk.failed()) break;
        // estimator sandwich for every vertex
        for (Vertex c = 0; c < ctx.n() && !chk.failed(); ++c) {
            chk.tally();
            const int hi = std::max(ctx.d(x, c), ctx.d(y, c));
            if (!(hi <= ctx.e(c) && ctx.e(c) <= hi + ctx.d2)) {
                json w = tuple_witness(ctx, {{"x", x}, {"y", y}, {"c", c}});
                w["clause"] = "sandwich";
                chk.violation(std::move(w));
            }
        }
        // middle-slice vertices have near-central eccentricity
        for (Vertex c = 0; c < ctx.n() && !chk.failed(); ++c) {
            if (ctx.d(x, c) + ctx.d(c, y) != dxy) continue;
            if (ctx.d(x, c) != dxy / 2 && ctx.d(y, c) != dxy / 2) continue;
            chk.tally();
            const int bound = (dxy + 1) / 2 + ctx.d2;
            if (ctx.e(c) > bound || ctx.e(c) > ctx.prof.rad + ctx.d2) {
                json w = tuple_witness(ctx, {{"x", x}, {"y", y}, {"c", c}});
                w["clause"] = "middle_slice";
                chk.violation(std::move(w));
            }
        }
        chk.tally();
        if (!(ctx.prof.diam >= dxy && dxy >= 2 * ctx.prof.rad - 2 * ctx.d2 - 1)) {
            json w = tuple_witness(ctx, {{"x", x}, {"y", y}});
            w["clause"] = "pair_distance";
            w["d"] = dxy;
            chk.violation(std::move(w));
        }
    }
    return chk.out;
}

CheckOutcome check_ecc5(Ctx& ctx) {
    Check chk("ECC-5");
    for (Vertex c = 0; c < ctx.n() && !chk.failed(); ++c) {
        auto row = ctx.dm.row(c);
        const int ec = ctx.e(c);
        for (Vertex v = 0; v < ctx.n() && !chk.failed(); ++v) {
            if (row[v] != ec) continue;  // v in F(c)
            chk.tally();
            if (ctx.e(v) < ctx.prof.diam - ctx.d2) {
                json w = tuple_witness(ctx, {{"c", c}, {"v", v}});
                w["ecc_v"] = ctx.e(v);
                w["diam"] = ctx.prof.diam;
                chk.violation(std::move(w));
            }
        }
    }
    return chk.out;
}

CheckOutcome check_ecc6(Ctx& ctx) {
    Check chk("ECC-6");
    for (Vertex x = 0; x < ctx.n() && !chk.failed(); ++x) {
        auto row = ctx.dm.row(x);
        const int ex = ctx.e(x);
        for (Vertex y = 0; y < ctx.n() && !chk.failed(); ++y) {
            if (row[y] != ex) continue;
            chk.tally();
            const bool ok = ctx.e(y) >= ctx.prof.diam - ctx.d2 &&
                            ctx.e(y) >= 2 * ctx.prof.rad - 3 * ctx.d2 - 1;
            if (!ok) {
                json w = tuple_witness(ctx, {{"x", x}, {"y", y}});
                w["ecc_y"] = ctx.e(y);
                chk.violation(std::move(w));
            }
        }
    }
    return chk.out;
}

CheckOutcome check_ecc7(Ctx& ctx) {
    Check chk("ECC-7");
    for (Vertex z = 0; z < ctx.n() && !chk.failed(); ++z) {
        const Vertex x = argmax_row(ctx.dm.row(z));
        const Vertex y = argmax_row(ctx.dm.row(x));
        const int dxy = ctx.d(x, y);
        for (Vertex c = 0; c < ctx.n() && !chk.failed(); ++c) {
            if (ctx.d(x, c) + ctx.d(c, y) != dxy) continue;
            if (ctx.d(x, c) != dxy / 2) continue;  // S_{floor(d/2)}(x, y)
            chk.tally();
            const bool ok = 2 * ctx.e(c) <= 2 * ctx.prof.rad + 3 * ctx.d2 &&
                            ctx.e(c) <= (dxy + 1) / 2 + 2 * ctx.d2;
            if (!ok) {
                json w = tuple_witness(ctx, {{"z", z}, {"x", x}, {"y", y}, {"c", c}});
                w["ecc_c"] = ctx.e(c);
                chk.violation(std::move(w));
            }
        }
    }
    return chk.out;
}

CheckOutcome enclosure_check(Ctx& ctx, const char* id, EnclosureMode mode) {
    Check chk(id);
    for (Vertex z : ctx.starts) {
        Vertex x, y;
        if (mode == EnclosureMode::Beam) {
            x = argmax_row(ctx.dm.row(z));
            y = argmax_row(ctx.dm.row(x));
        } else {
            std::tie(x, y) = matrix_sweep(ctx, z);
        }
        PathInGraph path = canonical_path_from_matrix(ctx.g, ctx.dm, x, y);
        const Vertex c = path.vertices[path.length() / 2];
        for (int k : ctx.cfg.enclosure_ks) {
            if (chk.failed()) break;
            const int radius = enclosure_radius(mode, k, ctx.d2);
            for (Vertex u = 0; u < ctx.n() && !chk.failed(); ++u) {
                if (ctx.prof.layer[u] > k) continue;
                chk.tally();
                if (ctx.d(c, u) > radius) {
                    json w = tuple_witness(ctx, {{"z", z}, {"x", x}, {"y", y}, {"c", c}, {"u", u}});
                    w["k"] = k;
                    w["radius"] = radius;
                    w["dist"] = ctx.d(c, u);
                    w["mode"] = mode == EnclosureMode::Beam ? "beam" : "mutual";
                    chk.violation(std::move(w));
                }
            }
        }
        if (chk.failed()) break;
    }
    return chk.out;
}

CheckOutcome check_ecc8(Ctx& ctx) { return enclosure_check(ctx, "ECC-8", EnclosureMode::Beam); }
CheckOutcome check_ecc9(Ctx& ctx) { return enclosure_check(ctx, "ECC-9", EnclosureMode::MutuallyDistant); }

CheckOutcome check_apx1(Ctx& ctx) {
    Check chk("APX-1");
    MatrixMetric m = ctx.metric();
    for (Vertex z : ctx.starts) {
        if (chk.failed()) break;
        SweepTrace trace = mutually_distant_pair(ctx.g, z);
        ApproxEccentricities est = approx_pair_left(ctx.g, trace);
        for (Vertex v = 0; v < ctx.n() && !chk.failed(); ++v) {
            chk.tally();
            if (!apx_pair_ok(m, v, est.est[v])) {
                json w = tuple_witness(ctx, {{"v", v}, {"x", est.anchor_x}, {"y", est.anchor_y}});
                w["start"] = ctx.g.label(z);
                w["est"] = est.est[v];
                w["exact"] = ctx.e(v);
                chk.violation(std::move(w));
            }
        }
    }
    return chk.out;
}

CheckOutcome check_apx2(Ctx& ctx) {
    Check chk("APX-2");
    MatrixMetric m = ctx.metric();
    for (Vertex z : ctx.starts) {
        if (chk.failed()) break;
        SweepTrace trace = mutually_distant_pair(ctx.g, z);
        auto [tree, est] = approx_tree_middle(ctx.g, trace);
        for (Vertex v = 0; v < ctx.n() && !chk.failed(); ++v) {
            chk.tally();
            if (!apx_tree_middle_ok(m, v, est.est[v])) {
                json w = tuple_witness(ctx, {{"v", v}, {"c", est.anchor_c}});
                w["start"] = ctx.g.label(z);
                w["est"] = est.est[v];
                w["exact"] = ctx.e(v);
                chk.violation(std::move(w));
            }
        }
    }
    return chk.out;
}

CheckOutcome check_apx3(Ctx& ctx) {
    Check chk("APX-3");
    MatrixMetric m = ctx.metric();
    std::vector<int> ks{0, 1};
    if (ctx.d2 > 1) ks.push_back(ctx.d2);  // k = 2*delta recovers the line bound
    std::int64_t skipped = 0;
    for (Vertex z : ctx.starts) {
        if (chk.failed()) break;
        for (int k : ks) {
            if (chk.failed()) break;
            auto [tree, est] = approx_tree_fast(ctx.g, z, k);
            const bool pair_md =
                ctx.d(est.anchor_x, est.anchor_y) == ctx.e(est.anchor_x) &&
                ctx.d(est.anchor_x, est.anchor_y) == ctx.e(est.anchor_y);
            for (Vertex v = 0; v < ctx.n() && !chk.failed(); ++v) {
                bool applicable = true;
                const bool ok = apx_tree_fast_ok(m, v, est.est[v], k, pair_md, &applicable);
                if (!applicable) {
                    ++skipped;
                    continue;
                }
                chk.tally();
                if (!ok) {
                    json w = tuple_witness(ctx, {{"v", v}, {"c", est.anchor_c}});
                    w["start"] = ctx.g.label(z);
                    w["k"] = k;
                    w["est"] = est.est[v];
                    w["exact"] = ctx.e(v);
                    w["pair_mutually_distant"] = pair_md;
                    chk.violation(std::move(w));
                }
            }
        }
    }
    if (skipped > 0 && !chk.failed()) {
        chk.out.note = std::to_string(skipped) + " instances with k > 2*delta and no certified pair";
    }
    if (chk.out.tested_instances == 0) {
        chk.out.status = CheckStatus::Skipped;
        chk.out.note = "no applicable instances";
    }
    return chk.out;
}

CheckOutcome id_check(Ctx& ctx, const char* id, bool first_identity) {
    Check chk(id);
    MatrixMetric m = ctx.metric();
    bool complete = for_each_universe_path(ctx, [&](const PathInGraph& p) {
        chk.tally();
        SegView s = segments_of(m, p);
        const int diff = m.e(p.front()) - m.e(p.back());
        bool ok = first_identity ? (s.down - s.up == diff)
                                 : (2 * s.up + s.hor == p.length() - diff);
        if (!ok) {
            json w;
            w["path"] = ctx.labels_of(p);
            w["up"] = s.up;
            w["horizontal"] = s.hor;
            w["down"] = s.down;
            chk.violation(std::move(w));
            return false;
        }
        return true;
    });
    chk.out.exhaustive = complete && !chk.failed();
    return chk.out;
}

CheckOutcome check_id1(Ctx& ctx) { return id_check(ctx, "ID-1", true); }
CheckOutcome check_id2(Ctx& ctx) { return id_check(ctx, "ID-2", false); }

using CheckFn = CheckOutcome (*)(Ctx&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"DUAL-1", check_dual1}, {"DUAL-2", check_dual2}, {"DUAL-3", check_dual3},
        {"DUAL-4", check_dual4}, {"DUAL-5", check_dual5},
        {"CVX-1", check_cvx1},   {"CVX-2", check_cvx2},   {"CVX-3", check_cvx3},
        {"CVX-4", check_cvx4},
        {"TER-1", check_ter1},   {"TER-2", check_ter2},   {"TER-3", check_ter3},
        {"TER-4", check_ter4},   {"TER-5", check_ter5},   {"TER-6", check_ter6},
        {"TER-7", check_ter7},   {"TER-8", check_ter8},   {"TER-9", check_ter9},
        {"ECC-1", check_ecc1},   {"ECC-2", check_ecc2},   {"ECC-3", check_ecc3},
        {"ECC-4", check_ecc4},   {"ECC-5", check_ecc5},   {"ECC-6", check_ecc6},
        {"ECC-7", check_ecc7},   {"ECC-8", check_ecc8},   {"ECC-9", check_ecc9},
        {"APX-1", check_apx1},   {"APX-2", check_apx2},   {"APX-3", check_apx3},
        {"ID-1", check_id1},     {"ID-2", check_id2},
    };
    return table;
}

}  // namespace

std::vector<std::string> check_registry() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : registry()) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool VerificationReport::all_pass() const {
    for (const CheckOutcome& c : checks) {
        if (c.status == CheckStatus::Fail) return false;
    }
    return true;
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

}  // namespace

json VerificationReport::to_json() const {
    json j;
    j["schema_version"] = 1;
    j["graph_id"] = graph_id;
    j["n"] = n;
    j["m"] = m;
    j["rad"] = rad;
    j["diam"] = diam;
    j["delta2"] = delta2;
    j["seed"] = seed;
    j["all_pass"] = all_pass();
    json arr = json::array();
    for (const CheckOutcome& c : checks) {
        json cj;
        cj["check_id"] = c.check_id;
        cj["status"] = status_name(c.status);
        cj["tested_instances"] = c.tested_instances;
        cj["mode"] = c.exhaustive ? "exhaustive" : "sampled";
        if (!c.witness.is_null()) cj["witness"] = c.witness;
        if (!c.note.empty()) cj["note"] = c.note;
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    return j;
}

VerificationReport run_suite(const Graph& g, const std::string& graph_id, const SuiteConfig& config) {
    if (g.n() > config.limits.matrix_cap || g.n() > config.limits.delta_cap) {
        fail(ErrorCode::SizeLimitExceeded,
             "run_suite: n=" + std::to_string(g.n()) + " exceeds the exact-oracle caps");
    }
    Ctx ctx = build_ctx(g, graph_id, config);

    VerificationReport rep;
    rep.graph_id = graph_id;
    rep.n = g.n();
    rep.m = g.m();
    rep.rad = ctx.prof.rad;
    rep.diam = ctx.prof.diam;
    rep.delta2 = ctx.d2;
    rep.seed = config.seed;
    for (const auto& [id, fn] : registry()) {
        CheckOutcome out = fn(ctx);
        if (out.status == CheckStatus::Fail && !reverify_witness(g, out.check_id, out.witness)) {
            out.note += (out.note.empty() ? "" : "; ");
            out.note += "witness failed independent re-verification";
        }
        rep.checks.push_back(std::move(out));
    }
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckOutcome& a, const CheckOutcome& b) { return a.check_id < b.check_id; });
    return rep;
}

// ---------------------------------------------------------------------------
// witness re-verification from fresh BFS sweeps
// ---------------------------------------------------------------------------

namespace {

Vertex vertex_from_label(const Graph& g, const json& j) {
    auto v = g.vertex_of(j.get<Label>());
    if (!v) fail(ErrorCode::UnknownVertex, "witness label not in graph");
    return *v;
}

PathInGraph path_from_labels(const Graph& g, const json& arr) {
    PathInGraph p;
    for (const auto& item : arr) p.vertices.push_back(vertex_from_label(g, item));
    return p;
}

}  // namespace

bool reverify_witness(const Graph& g, const std::string& check_id, const json& witness) {
    if (witness.is_null()) return false;
    FreshMetric m{g, {}, {}, {}, {}, {}};
    auto vx = [&](const char* name) { return vertex_from_label(g, witness.at("vertices").at(name)); };

    if (check_id == "DUAL-1") return !dual1_ok(m, vx("x"), vx("y"), vx("c"), vx("v"));
    if (check_id == "DUAL-2") return !dual2_ok(m, vx("x"), vx("y"), vx("c"), vx("v"));
    if (check_id == "DUAL-3") return !dual3_ok(m, vx("x"), vx("y"), vx("c"), vx("v"));
    if (check_id == "DUAL-4") return !dual4_ok(m, vx("x"), vx("y"), vx("c"));
    if (check_id == "DUAL-5") return !dual5_ok(m, vx("x"), vx("y"), vx("c"));

    if (check_id == "CVX-1" || check_id == "CVX-2") {
        // witness triple z in I(x,y) outside the set with min distance > beta
        if (!witness.contains("vertices") || !witness.at("vertices").contains("z")) return false;
        const Vertex x = vx("x"), y = vx("y"), z = vx("z");
        if (!in_interval(m, x, y, z)) return false;
        const int beta_bound = std::max(0, m.delta2() - 1);
        bool in_set;
        if (check_id == "CVX-1") {
            const Vertex center = vx("center");
            in_set = m.d(center, z) <= witness.at("radius").get<int>();
            if (m.d(center, x) > witness.at("radius").get<int>()) return false;
            if (m.d(center, y) > witness.at("radius").get<int>()) return false;
        } else {
            const int k = witness.at("k").get<int>();
            in_set = m.e(z) <= m.rad() + k;
            if (m.e(x) > m.rad() + k || m.e(y) > m.rad() + k) return false;
        }
        return !in_set && std::min(m.d(z, x), m.d(z, y)) > beta_bound;
    }
    if (check_id == "CVX-3") {
        // re-derive both betas and the violated clause from scratch
        const std::string clause = witness.at("clause").get<std::string>();
        auto disk_of = [&](const json& dj) {
            const Vertex c = vertex_from_label(g, dj.at("center"));
            const int r = dj.at("radius").get<int>();
            std::vector<Vertex> s;
            for (Vertex v = 0; v < g.n(); ++v) {
                if (m.d(c, v) <= r) s.push_back(v);
            }
            return s;
        };
        if (clause == "quasi_le_pseudo") {
            const Vertex c = vx("center");
            const int r = witness.at("radius").get<int>();
            std::vector<Vertex> s;
            for (Vertex v = 0; v < g.n(); ++v) {
                if (m.d(c, v) <= r) s.push_back(v);
            }
            return quasiconvexity_eps(g, s, g.n()) > pseudoconvexity_beta(g, s, g.n()).beta_min;
        }
        std::vector<Vertex> s1 = disk_of(witness.at("disk1"));
        std::vector<Vertex> s2 = disk_of(witness.at("disk2"));
        std::vector<Vertex> inter;
        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(inter));
        if (inter.empty()) return false;
        const int b1 = pseudoconvexity_beta(g, s1, g.n()).beta_min;
        const int b2 = pseudoconvexity_beta(g, s2, g.n()).beta_min;
        return pseudoconvexity_beta(g, inter, g.n()).beta_min > std::max(b1, b2);
    }
    if (check_id == "CVX-4") {
        const int k = witness.at("k").get<int>();
        int set_diam = 0;
        for (Vertex u = 0; u < g.n(); ++u) {
            if (m.e(u) > m.rad() + k) continue;
            for (Vertex v = u + 1; v < g.n(); ++v) {
                if (m.e(v) > m.rad() + k) continue;
                set_diam = std::max(set_diam, m.d(u, v));
            }
        }
        return set_diam > 2 * k + 2 * m.delta2() + 1;
    }

    if (check_id.rfind("TER-", 0) == 0 || check_id.rfind("ID-", 0) == 0) {
        PathInGraph p = path_from_labels(g, witness.at("path"));
        // the path itself must re-verify as shortest
        if (!is_shortest_path(g, p)) return false;
        if (check_id == "TER-1") return !ter1_ok(m, p, nullptr);
        if (check_id == "TER-2") return !ter2_ok(m, p, nullptr);
        if (check_id == "TER-3") return !ter3_ok(m, p, nullptr);
        if (check_id == "TER-4") return !ter4_ok(m, p, nullptr);
        if (check_id == "TER-5") return !ter5_ok(m, p, nullptr);
        if (check_id == "TER-6") return !ter6_ok(m, p, nullptr);
        if (check_id == "TER-7") return !ter7_ok(m, p, nullptr);
        if (check_id == "TER-8") return !ter8_ok(m, p, nullptr);
        if (check_id == "TER-9") return !ter9_ok(m, p, nullptr);
        SegView s = segments_of(m, p);
        const int diff = m.e(p.front()) - m.e(p.back());
        if (check_id == "ID-1") return s.down - s.up != diff;
        if (check_id == "ID-2") return 2 * s.up + s.hor != p.length() - diff;
    }

    if (check_id == "ECC-1") {
        const Vertex x = vx("x");
        std::vector<Vertex> c2d;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (2 * (m.e(v) - m.rad()) <= 2 * m.delta2()) c2d.push_back(v);
        }
        int dc2 = g.n(), dc = g.n();
        for (Vertex v : c2d) dc2 = std::min(dc2, m.d(x, v));
        for (Vertex v = 0; v < g.n(); ++v) {
            if (m.central(v)) dc = std::min(dc, m.d(x, v));
        }
        const int e = m.e(x);
        return !(e >= dc2 + m.rad() && e <= dc2 + m.rad() + m.delta2() && e <= dc + m.rad() &&
                 e >= dc + m.rad() - 2 * m.delta2());
    }
    if (check_id == "ECC-2") {
        const Vertex x = vx("x");
        const int k = m.e(x) - m.rad();
        int dc2 = g.n(), dc = g.n();
        for (Vertex v = 0; v < g.n(); ++v) {
            if (m.e(v) - m.rad() <= m.delta2()) dc2 = std::min(dc2, m.d(x, v));
            if (m.central(v)) dc = std::min(dc, m.d(x, v));
        }
        return !(dc2 <= k && k <= dc && 2 * dc <= 2 * dc2 + 3 * m.delta2());
    }
    if (check_id == "ECC-3") {
        const Vertex x = vx("x"), y = vx("y"), c = vx("c");
        if (m.d(x, y) != m.e(x)) return false;
        if (!in_interval(m, y, x, c)) return false;
        const int k = m.d(y, c) - m.rad();
        if (k < 0) return false;
        return m.e(c) > m.rad() + m.delta2() + k;
    }
    if (check_id == "ECC-4") {
        const std::string clause = witness.at("clause").get<std::string>();
        const Vertex x = vx("x"), y = vx("y");
        // pair must re-verify as mutually distant
        if (m.d(x, y) != m.e(x) || m.d(x, y) != m.e(y)) return false;
        if (clause == "sandwich") {
            const Vertex c = vx("c");
            const int hi = std::max(m.d(x, c), m.d(y, c));
            return !(hi <= m.e(c) && m.e(c) <= hi + m.delta2());
        }
        if (clause == "middle_slice") {
            const Vertex c = vx("c");
            const int dxy = m.d(x, y);
            if (!in_interval(m, x, y, c)) return false;
            if (m.d(x, c) != dxy / 2 && m.d(y, c) != dxy / 2) return false;
            return m.e(c) > (dxy + 1) / 2 + m.delta2() || m.e(c) > m.rad() + m.delta2();
        }
        return !(m.diam() >= m.d(x, y) && m.d(x, y) >= 2 * m.rad() - 2 * m.delta2() - 1);
    }
    if (check_id == "ECC-5") {
        const Vertex c = vx("c"), v = vx("v");
        if (m.d(c, v) != m.e(c)) return false;
        return m.e(v) < m.diam() - m.delta2();
    }
    if (check_id == "ECC-6") {
        const Vertex x = vx("x"), y = vx("y");
        if (m.d(x, y) != m.e(x)) return false;
        return !(m.e(y) >= m.diam() - m.delta2() && m.e(y) >= 2 * m.rad() - 3 * m.delta2() - 1);
    }
    if (check_id == "ECC-7") {
        const Vertex x = vx("x"), y = vx("y"), c = vx("c");
        const int dxy = m.d(x, y);
        if (!in_interval(m, x, y, c) || m.d(x, c) != dxy / 2) return false;
        return !(2 * m.e(c) <= 2 * m.rad() + 3 * m.delta2() && m.e(c) <= (dxy + 1) / 2 + 2 * m.delta2());
    }
    if (check_id == "ECC-8" || check_id == "ECC-9") {
        const Vertex c = vx("c"), u = vx("u");
        const int k = witness.at("k").get<int>();
        if (m.e(u) > m.rad() + k) return false;
        const EnclosureMode mode =
            witness.at("mode").get<std::string>() == "beam" ? EnclosureMode::Beam : EnclosureMode::MutuallyDistant;
        return m.d(c, u) > enclosure_radius(mode, k, m.delta2());
    }

    if (check_id == "APX-1") {
        const Vertex v = vx("v"), x = vx("x"), y = vx("y");
        const int est = std::max(m.d(x, v), m.d(y, v));
        if (m.d(x, y) != m.e(x) || m.d(x, y) != m.e(y)) return false;
        return !apx_pair_ok(m, v, est);
    }
    if (check_id == "APX-2" || check_id == "APX-3") {
        // recompute the estimator itself from scratch
        const Vertex v = vx("v");
        const Vertex start = vertex_from_label(g, witness.at("start"));
        if (check_id == "APX-2") {
            SweepTrace trace = mutually_distant_pair(g, start);
            auto [tree, est] = approx_tree_middle(g, trace);
            return !apx_tree_middle_ok(m, v, est.est[v]);
        }
        const int k = witness.at("k").get<int>();
        auto [tree, est] = approx_tree_fast(g, start, k);
        const bool pair_md = m.d(est.anchor_x, est.anchor_y) == m.e(est.anchor_x) &&
                             m.d(est.anchor_x, est.anchor_y) == m.e(est.anchor_y);
        bool applicable = true;
        const bool ok = apx_tree_fast_ok(m, v, est.est[v], k, pair_md, &applicable);
        return applicable && !ok;
    }
    return false;
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

std::vector<CorpusEntry> default_corpus() {
    std::vector<CorpusEntry> out;
    using K = FamilySpec::Kind;
    const std::vector<int> sizes{20, 40, 60, 80};
    // grid shapes with the matching vertex counts
    const std::map<int, std::pair<int, int>> grids{{20, {4, 5}}, {40, {5, 8}}, {60, {6, 10}}, {80, {8, 10}}};
    for (int n : sizes) {
        for (FamilySpec spec : {FamilySpec{K::Path, n, 0, 0}, FamilySpec{K::Cycle, n, 0, 0},
                                FamilySpec{K::Grid, grids.at(n).first, grids.at(n).second, 0}}) {
            out.push_back({spec.descriptor(), spec});
        }
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            FamilySpec tree{K::RandomTree, n, 0, seed};
            FamilySpec gnm2{K::GnmConnected, n, 2 * n, seed};
            FamilySpec gnm4{K::GnmConnected, n, 4 * n, seed};
            out.push_back({tree.descriptor(), tree});
            out.push_back({gnm2.descriptor(), gnm2});
            out.push_back({gnm4.descriptor(), gnm4});
        }
    }
    for (int k = 1; k <= 3; ++k) {
        for (int p = 1; p <= 2; ++p) {
            FamilySpec fig{K::Fig3, k, p, 0};
            out.push_back({fig.descriptor(), fig});
        }
    }
    return out;
}

bool CorpusReport::all_pass() const {
    for (const VerificationReport& r : graphs) {
        if (!r.all_pass()) return false;
    }
    return true;
}

json CorpusReport::to_json() const {
    json j;
    j["schema_version"] = 1;
    j["seed"] = seed;
    int failed = 0;
    json arr = json::array();
    for (const VerificationReport& r : graphs) {
        if (!r.all_pass()) ++failed;
        arr.push_back(r.to_json());
    }
    j["graphs"] = std::move(arr);
    j["graphs_total"] = graphs.size();
    j["graphs_failed"] = failed;
    j["all_pass"] = failed == 0;
    return j;
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& corpus, const SuiteConfig& config) {
    CorpusReport report;
    report.seed = config.seed;
    report.graphs.resize(corpus.size());
    SuiteConfig inner = config;
    inner.threads = 1;  // parallelism lives at the graph level here
    parallel_chunks(static_cast<std::int64_t>(corpus.size()), config.threads,
                    [&](int, std::int64_t begin, std::int64_t end) {
                        for (std::int64_t i = begin; i < end; ++i) {
                            Graph g = gen_family(corpus[i].spec);
                            report.graphs[i] = run_suite(g, corpus[i].id, inner);
                        }
                    });
    return report;
}

}  // namespace hyperterrain
