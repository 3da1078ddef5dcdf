#include "hyperterrain/convexity.hpp"

#include <algorithm>

#include "hyperterrain/prng.hpp"

namespace hyperterrain {

namespace {

// Members used for the pair scan: all of them, or a deterministic stride
// sample when the set exceeds the cap.
std::vector<Vertex> capped_members(std::span<const Vertex> s, int member_cap, bool& exact) {
    exact = static_cast<int>(s.size()) <= member_cap;
    std::vector<Vertex> members(s.begin(), s.end());
    std::sort(members.begin(), members.end());
    if (!exact) {
        std::vector<Vertex> sampled;
        const std::size_t stride = (members.size() + member_cap - 1) / member_cap;
        for (std::size_t i = 0; i < members.size(); i += stride) sampled.push_back(members[i]);
        members = std::move(sampled);
    }
    return members;
}

template <typename DistRow>
PseudoconvexityReport beta_core(int n, std::span<const Vertex> s, int member_cap, DistRow dist_row) {
    if (s.empty()) fail(ErrorCode::EmptySet, "pseudoconvexity_beta: empty set");
    PseudoconvexityReport rep;
    std::vector<std::uint8_t> in_set(n, 0);
    for (Vertex v : s) in_set[v] = 1;
    std::vector<Vertex> members = capped_members(s, member_cap, rep.exact);

    std::vector<Vertex> complement;
    complement.reserve(n - std::min<std::size_t>(s.size(), n));
    for (Vertex v = 0; v < n; ++v) {
        if (!in_set[v]) complement.push_back(v);
    }
    if (complement.empty()) return rep;  // S = V: vacuously convex

    int best = 0;
    std::array<Vertex, 3> best_triple{};
    bool have = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Vertex x = members[i];
        auto dx = dist_row(x);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const Vertex y = members[j];
            auto dy = dist_row(y);
            const int dxy = dx[y];
            // no z on the interval can reach above floor(dxy/2); strict skip
            // keeps tie witnesses lexicographically exact
            if (dxy / 2 < best) continue;
            for (Vertex z : complement) {
                if (dx[z] + dy[z] != dxy) continue;
                const int v = std::min<int>(dx[z], dy[z]);
                if (v == 0) continue;  // z equals x or y, impossible outside S anyway
                const std::array<Vertex, 3> triple{x, y, z};
                if (!have || v > best || (v == best && triple < best_triple)) {
                    if (!have || v > best) best = v;
                    best_triple = triple;
                    have = true;
                }
            }
        }
    }
    if (have) {
        rep.beta_min = best;
        rep.witness = best_triple;
    }
    return rep;
}

}  // namespace

PseudoconvexityReport pseudoconvexity_beta(const DistanceMatrix& dm, std::span<const Vertex> s,
                                           int member_cap) {
    return beta_core(dm.n(), s, member_cap, [&dm](Vertex v) { return dm.row(v); });
}

PseudoconvexityReport pseudoconvexity_beta(const Graph& g, std::span<const Vertex> s, int member_cap) {
    if (s.empty()) fail(ErrorCode::EmptySet, "pseudoconvexity_beta: empty set");
    bool exact = true;
    std::vector<Vertex> members = capped_members(s, member_cap, exact);
    std::vector<std::vector<std::int32_t>> rows(members.size());
    std::vector<int> index(g.n(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        rows[i] = bfs(g, members[i]).dist;
        index[members[i]] = static_cast<int>(i);
    }
    auto rep = beta_core(g.n(), s, member_cap, [&](Vertex v) -> const std::vector<std::int32_t>& {
        return rows[index[v]];
    });
    rep.exact = rep.exact && exact;
    return rep;
}

int quasiconvexity_eps(const DistanceMatrix& dm, std::span<const std::int32_t> dist_to_s,
                       std::span<const Vertex> s, int member_cap) {
    if (s.empty()) fail(ErrorCode::EmptySet, "quasiconvexity_eps: empty set");
    bool exact = true;
    std::vector<Vertex> members = capped_members(s, member_cap, exact);
    int eps = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        auto dx = dm.row(members[i]);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            auto dy = dm.row(members[j]);
            const int dxy = dx[members[j]];
            for (Vertex z = 0; z < dm.n(); ++z) {
                if (dx[z] + dy[z] == dxy) eps = std::max<int>(eps, dist_to_s[z]);
            }
        }
    }
    return eps;
}

int quasiconvexity_eps(const Graph& g, std::span<const Vertex> s, int member_cap) {
    if (s.empty()) fail(ErrorCode::EmptySet, "quasiconvexity_eps: empty set");
    std::vector<std::int32_t> dist_to_s = bfs_multi(g, s);
    bool exact = true;
    std::vector<Vertex> members = capped_members(s, member_cap, exact);
    std::vector<std::vector<std::int32_t>> rows(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) rows[i] = bfs(g, members[i]).dist;
    int eps = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const int dxy = rows[i][members[j]];
            for (Vertex z = 0; z < g.n(); ++z) {
                if (rows[i][z] + rows[j][z] == dxy) eps = std::max<int>(eps, dist_to_s[z]);
            }
        }
    }
    return eps;
}

std::vector<LayerConvexityResult> check_layer_pseudoconvexity(const DistanceMatrix& dm,
                                                              const EccentricityProfile& prof, int delta2) {
    std::vector<LayerConvexityResult> out;
    const int beta_bound = std::max(0, delta2 - 1);  // 2*delta - 1 in doubled units
    for (int k = 0; k <= prof.diam - prof.rad; ++k) {
        std::vector<Vertex> set;
        for (Vertex v = 0; v < dm.n(); ++v) {
            if (prof.layer[v] <= k) set.push_back(v);
        }
        LayerConvexityResult r;
        r.k = k;
        r.size = static_cast<int>(set.size());
        PseudoconvexityReport rep = pseudoconvexity_beta(dm, set, dm.n());
        r.beta_min = rep.beta_min;
        r.witness = rep.witness;
        r.pseudo_ok = rep.beta_min <= beta_bound;
        for (std::size_t i = 0; i < set.size(); ++i) {
            auto row = dm.row(set[i]);
            for (std::size_t j = i + 1; j < set.size(); ++j) {
                r.set_diam = std::max<int>(r.set_diam, row[set[j]]);
            }
        }
        r.diam_bound = 2 * k + 2 * delta2 + 1;
        r.diam_ok = r.set_diam <= r.diam_bound;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<DiskConvexityResult> check_disk_pseudoconvexity(const DistanceMatrix& dm,
                                                            const EccentricityProfile& prof, int delta2,
                                                            int samples, std::uint64_t seed) {
    std::vector<DiskConvexityResult> out;
    out.reserve(samples);
    SplitMix64 rng(mix64(seed, hash_string("disk_pseudoconvexity")));
    const int beta_bound = std::max(0, delta2 - 1);
    for (int i = 0; i < samples; ++i) {
        DiskConvexityResult r;
        r.center = static_cast<Vertex>(rng.below(dm.n()));
        r.radius = static_cast<int>(rng.below(std::max(1, prof.ecc[r.center])));
        std::vector<Vertex> set;
        auto row = dm.row(r.center);
        for (Vertex v = 0; v < dm.n(); ++v) {
            if (row[v] <= r.radius) set.push_back(v);
        }
        PseudoconvexityReport rep = pseudoconvexity_beta(dm, set, dm.n());
        r.beta_min = rep.beta_min;
        r.witness = rep.witness;
        r.ok = rep.beta_min <= beta_bound;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hyperterrain
