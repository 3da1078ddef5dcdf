#include "hyperterrain/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hyperterrain {

Graph Graph::from_edges(std::span<const std::pair<Label, Label>> edges) {
    if (edges.empty()) fail(ErrorCode::EmptyInput, "edge list is empty");

    std::vector<Label> labels;
    labels.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        if (a == b) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    Graph g;
    g.labels_ = std::move(labels);
    g.n_ = static_cast<int>(g.labels_.size());
    g.m_ = static_cast<std::int64_t>(edges.size());

    auto dense = [&g](Label l) -> Vertex {
        auto it = std::lower_bound(g.labels_.begin(), g.labels_.end(), l);
        return static_cast<Vertex>(it - g.labels_.begin());
    };

    std::vector<std::pair<Vertex, Vertex>> norm;
    norm.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        Vertex u = dense(a), v = dense(b);
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    for (std::size_t i = 1; i < norm.size(); ++i) {
        if (norm[i] == norm[i - 1]) {
            fail(ErrorCode::DuplicateEdge,
                 "duplicate edge (" + std::to_string(g.labels_[norm[i].first]) + ", " +
                     std::to_string(g.labels_[norm[i].second]) + ")");
        }
    }

    g.offsets_.assign(g.n_ + 1, 0);
    for (const auto& [u, v] : norm) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (int v = 0; v < g.n_; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adj_.resize(static_cast<std::size_t>(2 * g.m_));
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : norm) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < g.n_; ++v) {
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    }

    // All algorithms here assume connectivity; reject anything else up front.
    DistanceVector d = bfs(g, 0);
    for (int v = 0; v < g.n_; ++v) {
        if (d.dist[v] < 0) {
            fail(ErrorCode::DisconnectedGraph,
                 "vertices " + std::to_string(g.labels_[0]) + " and " + std::to_string(g.labels_[v]) +
                     " lie in different components");
        }
    }
    return g;
}

std::optional<Vertex> Graph::vertex_of(Label label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int DistanceVector::max_value() const {
    int best = 0;
    for (int d : dist) best = std::max(best, static_cast<int>(d));
    return best;
}

Vertex DistanceVector::argmax() const {
    Vertex best = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(dist.size()); ++v) {
        if (dist[v] > dist[best]) best = v;
    }
    return best;
}

DistanceVector bfs(const Graph& g, Vertex source) {
    g.check_vertex(source);
    DistanceVector out;
    out.source = source;
    out.dist.assign(g.n(), -1);
    std::vector<Vertex> queue;
    queue.reserve(g.n());
    out.dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        std::int32_t du = out.dist[u];
        for (Vertex w : g.neighbors(u)) {
            if (out.dist[w] < 0) {
                out.dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return out;
}

std::vector<std::int32_t> bfs_multi(const Graph& g, std::span<const Vertex> sources) {
    if (sources.empty()) fail(ErrorCode::EmptySet, "multi-source BFS needs a non-empty source set");
    std::vector<std::int32_t> dist(g.n(), -1);
    std::vector<Vertex> queue;
    queue.reserve(g.n());
    for (Vertex s : sources) {
        g.check_vertex(s);
        if (dist[s] < 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        std::int32_t du = dist[u];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<Vertex> interval(const Graph& g, Vertex x, Vertex y, const DistanceVector& dx,
                             const DistanceVector& dy) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (dx.source != x || dy.source != y) fail(ErrorCode::InvalidParams, "interval: distance vectors do not match x, y");
    const int dxy = dx.dist[y];
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (dx.dist[v] + dy.dist[v] == dxy) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> slice(const Graph& g, Vertex x, Vertex y, int k) {
    g.check_vertex(x);
    g.check_vertex(y);
    DistanceVector dx = bfs(g, x);
    DistanceVector dy = bfs(g, y);
    const int dxy = dx.dist[y];
    if (k < 0 || k > dxy) {
        fail(ErrorCode::KOutOfRange,
             "slice index " + std::to_string(k) + " outside [0, " + std::to_string(dxy) + "]");
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (dx.dist[v] + dy.dist[v] == dxy && dx.dist[v] == k) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> disk(const Graph& g, std::span<const Vertex> centers, int radius) {
    if (centers.empty()) fail(ErrorCode::EmptySet, "disk: center set is empty");
    if (radius < 0) fail(ErrorCode::InvalidParams, "disk: negative radius");
    std::vector<std::int32_t> dist = bfs_multi(g, centers);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (dist[v] >= 0 && dist[v] <= radius) out.push_back(v);
    }
    return out;
}

int gromov_product2(const Graph& g, Vertex x, Vertex y, Vertex z) {
    g.check_vertex(x);
    g.check_vertex(y);
    g.check_vertex(z);
    DistanceVector dz = bfs(g, z);
    DistanceVector dx = bfs(g, x);
    return gromov_product2_from(dz.dist[x], dz.dist[y], dx.dist[y]);
}

PathInGraph canonical_shortest_path(const Graph& g, const DistanceVector& dist_from, Vertex to) {
    g.check_vertex(to);
    PathInGraph path;
    Vertex cur = to;
    path.vertices.push_back(cur);
    while (dist_from.dist[cur] > 0) {
        const int want = dist_from.dist[cur] - 1;
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur)) {
            if (dist_from.dist[w] == want) {
                next = w;  // sorted adjacency: first hit is the smallest id
                break;
            }
        }
        cur = next;
        path.vertices.push_back(cur);
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

PathInGraph canonical_shortest_path(const Graph& g, Vertex from, Vertex to) {
    g.check_vertex(from);
    return canonical_shortest_path(g, bfs(g, from), to);
}

bool is_shortest_path(const Graph& g, const PathInGraph& path) {
    if (path.vertices.empty()) return false;
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        if (!g.has_edge(path.vertices[i], path.vertices[i + 1])) return false;
    }
    DistanceVector d = bfs(g, path.front());
    return d.dist[path.back()] == path.length();
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<Label, Label>> edges;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#' || line[pos] == '%') continue;
        std::istringstream ls(line);
        Label a, b;
        if (!(ls >> a >> b)) {
            fail(ErrorCode::BadInput, "line " + std::to_string(lineno) + ": expected two integers");
        }
        std::string rest;
        if (ls >> rest) {
            fail(ErrorCode::BadInput, "line " + std::to_string(lineno) + ": trailing token '" + rest + "'");
        }
        if (a < 0 || b < 0) {
            fail(ErrorCode::BadInput, "line " + std::to_string(lineno) + ": vertex ids must be non-negative");
        }
        edges.emplace_back(a, b);
    }
    return Graph::from_edges(edges);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::BadInput, "cannot open file: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
        }
    }
}

}  // namespace hyperterrain
