#include "hyperterrain/path_space.hpp"

#include <algorithm>

namespace hyperterrain {

namespace {

bool enumerate_rec(const Graph& g, std::span<const std::uint16_t> dist_to_y, PathInGraph& path,
                   Vertex y, std::int64_t& budget, const std::function<bool(const PathInGraph&)>& visit,
                   bool& aborted) {
    const Vertex cur = path.vertices.back();
    if (cur == y) {
        if (budget <= 0) return false;
        --budget;
        if (!visit(path)) aborted = true;
        return true;
    }
    for (Vertex w : g.neighbors(cur)) {
        if (dist_to_y[w] != dist_to_y[cur] - 1) continue;
        path.vertices.push_back(w);
        bool ok = enumerate_rec(g, dist_to_y, path, y, budget, visit, aborted);
        path.vertices.pop_back();
        if (!ok || aborted) return ok;
    }
    return true;
}

}  // namespace

bool for_each_shortest_path(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                            std::int64_t& budget, const std::function<bool(const PathInGraph&)>& visit) {
    PathInGraph path;
    path.vertices.push_back(x);
    bool aborted = false;
    return enumerate_rec(g, dm.row(y), path, y, budget, visit, aborted);
}

PathInGraph sample_shortest_path(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                                 SplitMix64& rng) {
    auto dist_to_y = dm.row(y);
    PathInGraph path;
    Vertex cur = x;
    path.vertices.push_back(cur);
    std::vector<Vertex> options;
    while (cur != y) {
        options.clear();
        for (Vertex w : g.neighbors(cur)) {
            if (dist_to_y[w] == dist_to_y[cur] - 1) options.push_back(w);
        }
        cur = options[rng.below(options.size())];
        path.vertices.push_back(cur);
    }
    return path;
}

PathInGraph canonical_path_from_matrix(const Graph& g, const DistanceMatrix& dm, Vertex from, Vertex to) {
    auto dist_from = dm.row(from);
    PathInGraph path;
    Vertex cur = to;
    path.vertices.push_back(cur);
    while (dist_from[cur] > 0) {
        for (Vertex w : g.neighbors(cur)) {
            if (dist_from[w] == dist_from[cur] - 1) {
                cur = w;
                break;
            }
        }
        path.vertices.push_back(cur);
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

}  // namespace hyperterrain
