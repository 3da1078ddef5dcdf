#include "hyperterrain/extremal.hpp"

namespace hyperterrain {

Vertex furthest_vertex(const DistanceVector& from_v) { return from_v.argmax(); }

Vertex furthest_vertex(const Graph& g, Vertex v) { return bfs(g, v).argmax(); }

SweepTrace mutually_distant_pair(const Graph& g, Vertex start) {
    g.check_vertex(start);
    SweepTrace trace;
    trace.sequence.push_back(start);

    DistanceVector d = bfs(g, start);
    Vertex cur = d.argmax();
    trace.sequence.push_back(cur);
    trace.dists.push_back(d.dist[cur]);

    // Each round certifies e(last) by one BFS; e(last) == d(prev,last) means
    // prev is also furthest from last, so the pair is mutually distant.
    for (int iter = 0; iter <= g.n(); ++iter) {
        d = bfs(g, cur);
        Vertex next = d.argmax();
        const int e_cur = d.dist[next];
        if (e_cur == trace.dists.back()) {
            trace.mutually_distant = true;
            return trace;
        }
        cur = next;
        trace.sequence.push_back(cur);
        trace.dists.push_back(e_cur);
    }
    fail(ErrorCode::IterationCapExceeded, "mutually_distant_pair: sweep did not stabilize within n iterations");
}

std::pair<Vertex, Vertex> beam(const Graph& g, Vertex z) {
    Vertex x = furthest_vertex(g, z);
    Vertex y = furthest_vertex(g, x);
    return {x, y};
}

Vertex middle_vertex(const PathInGraph& path) {
    if (path.vertices.empty()) fail(ErrorCode::InvalidParams, "middle_vertex: empty path");
    return path.vertices[path.length() / 2];
}

}  // namespace hyperterrain
