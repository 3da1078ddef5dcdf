#include "hyperterrain/approx.hpp"

#include <algorithm>

namespace hyperterrain {

const char* method_name(ApproxMethod m) {
    switch (m) {
        case ApproxMethod::PairLeft: return "pair_left";
        case ApproxMethod::TreeMiddle: return "tree_middle";
        case ApproxMethod::TreeFastK: return "tree_fast_k";
    }
    return "unknown";
}

std::string guarantee_side(ApproxMethod m) {
    return m == ApproxMethod::PairLeft ? "left" : "right";
}

std::string guarantee_additive(ApproxMethod m) {
    switch (m) {
        case ApproxMethod::PairLeft: return "2d";
        case ApproxMethod::TreeMiddle: return "4d+1";
        case ApproxMethod::TreeFastK: return "6d+1-k";
    }
    return "";
}

SpanningTree bfs_tree(const Graph& g, Vertex root) {
    DistanceVector d = bfs(g, root);
    SpanningTree t;
    t.root = root;
    t.parent.assign(g.n(), root);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (v == root) continue;
        const int want = d.dist[v] - 1;
        for (Vertex w : g.neighbors(v)) {
            if (d.dist[w] == want) {
                t.parent[v] = w;  // first hit in sorted adjacency = smallest id
                break;
            }
        }
    }
    return t;
}

void validate_spanning_tree(const Graph& g, const SpanningTree& t) {
    if (static_cast<int>(t.parent.size()) != g.n()) fail(ErrorCode::InvalidTree, "parent array size mismatch");
    if (t.root < 0 || t.root >= g.n() || t.parent[t.root] != t.root) {
        fail(ErrorCode::InvalidTree, "root parent must be the root itself");
    }
    // every vertex must reach the root through graph edges without cycles
    std::vector<std::int8_t> state(g.n(), 0);  // 0 unknown, 1 on stack, 2 ok
    state[t.root] = 2;
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < g.n(); ++v) {
        Vertex cur = v;
        stack.clear();
        while (state[cur] == 0) {
            state[cur] = 1;
            stack.push_back(cur);
            Vertex p = t.parent[cur];
            if (p < 0 || p >= g.n() || !g.has_edge(cur, p)) {
                fail(ErrorCode::InvalidTree, "parent edge (" + std::to_string(cur) + ", " +
                                                 std::to_string(p) + ") is not a graph edge");
            }
            cur = p;
        }
        if (state[cur] == 1) fail(ErrorCode::InvalidTree, "parent pointers contain a cycle");
        for (Vertex u : stack) state[u] = 2;
    }
}

namespace {

// Adjacency of the tree only; used for tree BFS passes.
std::vector<std::vector<Vertex>> tree_adjacency(const SpanningTree& t) {
    std::vector<std::vector<Vertex>> adj(t.parent.size());
    for (Vertex v = 0; v < static_cast<Vertex>(t.parent.size()); ++v) {
        if (v == t.root) continue;
        adj[v].push_back(t.parent[v]);
        adj[t.parent[v]].push_back(v);
    }
    return adj;
}

std::vector<int> tree_bfs(const std::vector<std::vector<Vertex>>& adj, std::span<const Vertex> sources) {
    std::vector<int> dist(adj.size(), -1);
    std::vector<Vertex> queue;
    queue.reserve(adj.size());
    for (Vertex s : sources) {
        dist[s] = 0;
        queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : adj[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<int> tree_eccentricities(const Graph& g, const SpanningTree& t) {
    validate_spanning_tree(g, t);
    auto adj = tree_adjacency(t);

    // tree center via double sweep: endpoints of a diametral path
    const Vertex r = t.root;
    std::vector<int> d0 = tree_bfs(adj, std::span<const Vertex>(&r, 1));
    Vertex a = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(adj.size()); ++v) {
        if (d0[v] > d0[a]) a = v;
    }
    std::vector<int> da = tree_bfs(adj, std::span<const Vertex>(&a, 1));
    Vertex b = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(adj.size()); ++v) {
        if (da[v] > da[b]) b = v;
    }
    const int tree_diam = da[b];
    const int tree_rad = (tree_diam + 1) / 2;

    // walk the diametral (b -> a) path to its middle vertex/vertices
    std::vector<Vertex> path;
    Vertex cur = b;
    path.push_back(cur);
    while (da[cur] > 0) {
        for (Vertex w : adj[cur]) {
            if (da[w] == da[cur] - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    std::vector<Vertex> centers;
    centers.push_back(path[tree_diam / 2]);
    if (tree_diam % 2 == 1) centers.push_back(path[tree_diam / 2 + 1]);

    std::vector<int> dc = tree_bfs(adj, centers);
    std::vector<int> ecc(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) ecc[v] = dc[v] + tree_rad;
    return ecc;
}

namespace {

// Confirms the trace terminal pair is mutually distant and returns the two
// distance vectors, which the estimators reuse.
std::pair<DistanceVector, DistanceVector> checked_pair(const Graph& g, const SweepTrace& trace) {
    if (trace.sequence.size() < 2) fail(ErrorCode::NotMutuallyDistant, "trace has no terminal pair");
    const Vertex x = trace.x(), y = trace.y();
    DistanceVector dx = bfs(g, x);
    DistanceVector dy = bfs(g, y);
    const int dxy = dx.dist[y];
    if (dx.max_value() != dxy || dy.max_value() != dxy) {
        fail(ErrorCode::NotMutuallyDistant, "pair (" + std::to_string(g.label(x)) + ", " +
                                                std::to_string(g.label(y)) + ") is not mutually distant");
    }
    return {std::move(dx), std::move(dy)};
}

}  // namespace

ApproxEccentricities approx_pair_left(const Graph& g, const SweepTrace& trace) {
    auto [dx, dy] = checked_pair(g, trace);
    ApproxEccentricities out;
    out.method = ApproxMethod::PairLeft;
    out.anchor_x = trace.x();
    out.anchor_y = trace.y();
    out.est.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) out.est[v] = std::max(dx.dist[v], dy.dist[v]);
    return out;
}

std::pair<SpanningTree, ApproxEccentricities> approx_tree_middle(const Graph& g, const SweepTrace& trace) {
    auto [dx, dy] = checked_pair(g, trace);
    PathInGraph path = canonical_shortest_path(g, dx, trace.y());
    const Vertex c = middle_vertex(path);
    SpanningTree t = bfs_tree(g, c);
    ApproxEccentricities out;
    out.method = ApproxMethod::TreeMiddle;
    out.anchor_x = trace.x();
    out.anchor_y = trace.y();
    out.anchor_c = c;
    out.est = tree_eccentricities(g, t);
    return {std::move(t), std::move(out)};
}

std::pair<SpanningTree, ApproxEccentricities> approx_tree_fast(const Graph& g, Vertex start, int k) {
    if (k < 0) fail(ErrorCode::InvalidParams, "approx_tree_fast: k must be >= 0");
    g.check_vertex(start);

    std::vector<Vertex> seq{start};
    std::vector<int> dists;
    int stall = -1;
    DistanceVector d = bfs(g, start);
    // u_1 .. u_{k+2}, one BFS each from u_0 .. u_{k+1}
    for (int i = 0; i <= k + 1; ++i) {
        Vertex next = d.argmax();
        const int e_cur = d.dist[next];
        if (!dists.empty() && stall < 0 && e_cur == dists.back()) {
            stall = static_cast<int>(dists.size());  // pair {u_{i-1}, u_i} is mutually distant
        }
        seq.push_back(next);
        dists.push_back(e_cur);
        if (i <= k) d = bfs(g, next);
    }

    const Vertex ux = seq[seq.size() - 2];  // u_{k+1}
    const Vertex uy = seq.back();           // u_{k+2}
    PathInGraph path = canonical_shortest_path(g, d, uy);  // d is BFS(u_{k+1})
    const Vertex c = middle_vertex(path);
    SpanningTree t = bfs_tree(g, c);
    ApproxEccentricities out;
    out.method = ApproxMethod::TreeFastK;
    out.k = k;
    out.anchor_x = ux;
    out.anchor_y = uy;
    out.anchor_c = c;
    out.stall_index = stall;
    out.est = tree_eccentricities(g, t);
    return {std::move(t), std::move(out)};
}

int enclosure_radius(EnclosureMode mode, int k, int delta2) {
    // beam: 5*delta + 1 + k, mutually distant: 4*delta + 1 + k; evaluated in
    // doubled units and floored, since the enclosed distances are integers.
    if (mode == EnclosureMode::Beam) return (5 * delta2 + 2 * (1 + k)) / 2;
    return 2 * delta2 + 1 + k;
}

std::vector<Vertex> center_enclosure(const Graph& g, Vertex c, EnclosureMode mode, int k,
                                     std::optional<int> delta2) {
    if (!delta2.has_value()) fail(ErrorCode::MissingDelta, "center_enclosure needs a hyperbolicity bound");
    if (k < 0 || *delta2 < 0) fail(ErrorCode::InvalidParams, "center_enclosure: k and delta2 must be >= 0");
    g.check_vertex(c);
    return disk(g, std::span<const Vertex>(&c, 1), enclosure_radius(mode, k, *delta2));
}

RadiusDiameterEstimates radius_diameter_estimates(const Graph& g, Vertex start) {
    g.check_vertex(start);
    RadiusDiameterEstimates est;

    auto [bx, by] = beam(g, start);
    est.beam_x = bx;
    est.beam_y = by;
    PathInGraph beam_path = canonical_shortest_path(g, bx, by);
    est.beam_middle = middle_vertex(beam_path);
    est.rad_ub_fast = bfs(g, est.beam_middle).max_value();

    SweepTrace trace = mutually_distant_pair(g, start);
    est.pair_x = trace.x();
    est.pair_y = trace.y();
    est.diam_lb = trace.pair_distance();
    PathInGraph pair_path = canonical_shortest_path(g, trace.x(), trace.y());
    est.mutual_middle = middle_vertex(pair_path);
    est.rad_ub_tight = bfs(g, est.mutual_middle).max_value();
    return est;
}

}  // namespace hyperterrain
