#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperterrain/error.hpp"

namespace hyperterrain {

using Vertex = std::int32_t;
using Label = std::int64_t;

/// Immutable simple connected undirected graph in CSR form over dense vertex
/// ids 0..n-1. Input labels are arbitrary; they are remapped to dense ids in
/// ascending label order and kept for reporting. Neighbor lists are sorted
/// ascending, which pins down every smallest-id tie-break in the library.
class Graph {
public:
    static Graph from_edges(std::span<const std::pair<Label, Label>> edges);

    int n() const { return n_; }
    std::int64_t m() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

    Label label(Vertex v) const { return labels_[v]; }
    std::span<const Label> labels() const { return labels_; }
    std::optional<Vertex> vertex_of(Label label) const;
    bool has_edge(Vertex u, Vertex v) const;

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) fail(ErrorCode::UnknownVertex, "vertex id out of range: " + std::to_string(v));
    }

private:
    Graph() = default;

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> offsets_;
    std::vector<Vertex> adj_;
    std::vector<Label> labels_;
};

struct DistanceVector {
    Vertex source = 0;
    std::vector<std::int32_t> dist;

    int operator[](Vertex v) const { return dist[v]; }
    int max_value() const;
    // Smallest-id vertex realizing the maximum distance.
    Vertex argmax() const;
};

/// An explicit shortest path v_0..v_k; consecutive vertices adjacent and
/// k = d(v_0, v_k).
struct PathInGraph {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

DistanceVector bfs(const Graph& g, Vertex source);
std::vector<std::int32_t> bfs_multi(const Graph& g, std::span<const Vertex> sources);

/// I(x,y) = { v : d(x,v) + d(v,y) = d(x,y) }, ascending ids.
std::vector<Vertex> interval(const Graph& g, Vertex x, Vertex y, const DistanceVector& dx,
                             const DistanceVector& dy);

/// S_k(x,y) = { v in I(x,y) : d(v,x) = k }.
std::vector<Vertex> slice(const Graph& g, Vertex x, Vertex y, int k);

/// D(centers, radius) = { u : d(u, centers) <= radius }.
std::vector<Vertex> disk(const Graph& g, std::span<const Vertex> centers, int radius);

/// Doubled Gromov product 2*(x|y)_z = d(x,z) + d(y,z) - d(x,y); always an
/// integer, so no half-values leak into comparisons.
int gromov_product2(const Graph& g, Vertex x, Vertex y, Vertex z);
inline int gromov_product2_from(int d_xz, int d_yz, int d_xy) { return d_xz + d_yz - d_xy; }

/// Deterministic representative shortest path: walk from `to` back toward
/// `from`, always taking the smallest-id neighbor that decreases the distance
/// to `from`; returned in from..to order.
PathInGraph canonical_shortest_path(const Graph& g, Vertex from, Vertex to);
PathInGraph canonical_shortest_path(const Graph& g, const DistanceVector& dist_from, Vertex to);

bool is_shortest_path(const Graph& g, const PathInGraph& path);

// Edge-list text: one edge per line, two whitespace-separated non-negative
// integers; lines starting with '#' or '%' and blank lines are ignored.
Graph read_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace hyperterrain
