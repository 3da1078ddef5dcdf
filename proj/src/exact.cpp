#include "hyperterrain/exact.hpp"

#include <algorithm>

#include "hyperterrain/parallel.hpp"

namespace hyperterrain {

DistanceMatrix all_pairs_distances(const Graph& g, const OracleLimits& limits, int threads) {
    if (g.n() > limits.matrix_cap) {
        fail(ErrorCode::SizeLimitExceeded, "all_pairs_distances: n=" + std::to_string(g.n()) +
                                               " exceeds cap " + std::to_string(limits.matrix_cap));
    }
    DistanceMatrix dm(g.n());
    parallel_chunks(g.n(), threads, [&](int, std::int64_t begin, std::int64_t end) {
        for (std::int64_t s = begin; s < end; ++s) {
            DistanceVector d = bfs(g, static_cast<Vertex>(s));
            for (Vertex v = 0; v < g.n(); ++v) dm.set(static_cast<Vertex>(s), v, d.dist[v]);
        }
    });
    return dm;
}

namespace {

EccentricityProfile finish_profile(std::vector<int> ecc) {
    EccentricityProfile prof;
    prof.ecc = std::move(ecc);
    prof.rad = *std::min_element(prof.ecc.begin(), prof.ecc.end());
    prof.diam = *std::max_element(prof.ecc.begin(), prof.ecc.end());
    prof.layer.resize(prof.ecc.size());
    for (std::size_t v = 0; v < prof.ecc.size(); ++v) {
        prof.layer[v] = prof.ecc[v] - prof.rad;
        if (prof.layer[v] == 0) prof.center.push_back(static_cast<Vertex>(v));
    }
    return prof;
}

}  // namespace

EccentricityProfile eccentricity_profile(const Graph& g, const DistanceMatrix& dm) {
    std::vector<int> ecc(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        auto row = dm.row(v);
        ecc[v] = *std::max_element(row.begin(), row.end());
    }
    return finish_profile(std::move(ecc));
}

EccentricityProfile eccentricity_profile(const Graph& g, const OracleLimits& limits, int threads) {
    if (g.n() > limits.matrix_cap) {
        fail(ErrorCode::SizeLimitExceeded, "eccentricity_profile: n=" + std::to_string(g.n()) +
                                               " exceeds cap " + std::to_string(limits.matrix_cap));
    }
    std::vector<int> ecc(g.n(), 0);
    parallel_chunks(g.n(), threads, [&](int, std::int64_t begin, std::int64_t end) {
        for (std::int64_t s = begin; s < end; ++s) {
            ecc[s] = bfs(g, static_cast<Vertex>(s)).max_value();
        }
    });
    return finish_profile(std::move(ecc));
}

std::vector<Vertex> furthest_set(const DistanceMatrix& dm, Vertex v) {
    auto row = dm.row(v);
    int e = *std::max_element(row.begin(), row.end());
    std::vector<Vertex> out;
    for (Vertex u = 0; u < dm.n(); ++u) {
        if (row[u] == e) out.push_back(u);
    }
    return out;
}

std::vector<Vertex> furthest_set(const Graph& g, Vertex v) {
    DistanceVector d = bfs(g, v);
    int e = d.max_value();
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (d.dist[u] == e) out.push_back(u);
    }
    return out;
}

LocalityMap locality_map(const Graph& g, const EccentricityProfile& prof) {
    LocalityMap out;
    out.loc.assign(g.n(), 0);
    std::vector<std::int32_t> dist(g.n());
    std::vector<Vertex> queue;
    queue.reserve(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        if (prof.layer[v] == 0) continue;  // central: loc = 0 by definition
        // BFS from v truncated at the first strictly smaller eccentricity
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[v] = 0;
        queue.push_back(v);
        int found = -1;
        for (std::size_t head = 0; head < queue.size() && found < 0; ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[u] + 1;
                if (prof.ecc[w] < prof.ecc[v]) {
                    found = dist[w];
                    break;
                }
                queue.push_back(w);
            }
        }
        out.loc[v] = found;
    }
    return out;
}

int quadruple_gap(int duv, int dwx, int duw, int dvx, int dux, int dvw) {
    std::array<int, 3> sums{duv + dwx, duw + dvx, dux + dvw};
    std::sort(sums.begin(), sums.end());
    return sums[2] - sums[1];
}

HyperbolicityCertificate hyperbolicity_exact(const DistanceMatrix& dm, const OracleLimits& limits,
                                             int threads) {
    const int n = dm.n();
    if (n > limits.delta_cap) {
        fail(ErrorCode::SizeLimitExceeded, "hyperbolicity_exact: n=" + std::to_string(n) +
                                               " exceeds cap " + std::to_string(limits.delta_cap));
    }
    struct Best {
        int delta2 = 0;
        std::array<Vertex, 4> witness{0, 0, 0, 0};
        bool seen = false;
    };
    const int nthreads = resolve_threads(threads);
    std::vector<Best> best(std::max(1, nthreads));

    parallel_chunks(n, nthreads, [&](int chunk, std::int64_t begin, std::int64_t end) {
        Best& b = best[chunk];
        for (Vertex u = static_cast<Vertex>(begin); u < end; ++u) {
            auto du = dm.row(u);
            for (Vertex v = u + 1; v < n; ++v) {
                auto dv = dm.row(v);
                const int duv = du[v];
                for (Vertex w = v + 1; w < n; ++w) {
                    auto dw = dm.row(w);
                    const int duw = du[w], dvw = dv[w];
                    for (Vertex x = w + 1; x < n; ++x) {
                        const int s1 = duv + dw[x];
                        const int s2 = duw + dv[x];
                        const int s3 = du[x] + dvw;
                        int hi = s1, mid = s2;
                        if (mid > hi) std::swap(hi, mid);
                        if (s3 > hi) {
                            mid = hi;
                            hi = s3;
                        } else if (s3 > mid) {
                            mid = s3;
                        }
                        const int gap = hi - mid;
                        if (!b.seen || gap > b.delta2) {
                            b.delta2 = gap;
                            b.witness = {u, v, w, x};
                            b.seen = true;
                        }
                    }
                }
            }
        }
    });

    HyperbolicityCertificate cert;
    bool any = false;
    for (const Best& b : best) {
        if (!b.seen) continue;
        if (!any || b.delta2 > cert.delta2 ||
            (b.delta2 == cert.delta2 && b.witness < cert.witness)) {
            cert.delta2 = b.delta2;
            cert.witness = b.witness;
            any = true;
        }
    }
    if (!any) {
        // fewer than 4 vertices: no quadruple, delta = 0
        cert.delta2 = 0;
        Vertex v0 = 0;
        cert.witness = {v0, v0, v0, v0};
    }
    return cert;
}

HyperbolicityCertificate hyperbolicity_exact(const Graph& g, const OracleLimits& limits, int threads) {
    if (g.n() > limits.delta_cap) {
        fail(ErrorCode::SizeLimitExceeded, "hyperbolicity_exact: n=" + std::to_string(g.n()) +
                                               " exceeds cap " + std::to_string(limits.delta_cap));
    }
    DistanceMatrix dm = all_pairs_distances(g, limits, threads);
    return hyperbolicity_exact(dm, limits, threads);
}

}  // namespace hyperterrain
