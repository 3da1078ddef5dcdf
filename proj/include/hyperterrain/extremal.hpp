#pragma once

#include <utility>
#include <vector>

#include "hyperterrain/graph.hpp"

namespace hyperterrain {

/// Record of an iterated furthest-vertex sweep v_0, v_1, ... where each
/// v_{i+1} is the smallest-id vertex furthest from v_i. dists[i] =
/// d(v_i, v_{i+1}) = e(v_i); the sequence of step distances is non-decreasing.
struct SweepTrace {
    std::vector<Vertex> sequence;
    std::vector<int> dists;
    bool mutually_distant = false;

    Vertex x() const { return sequence[sequence.size() - 2]; }
    Vertex y() const { return sequence.back(); }
    int pair_distance() const { return dists.back(); }
};

/// Smallest-id member of F(v).
Vertex furthest_vertex(const DistanceVector& from_v);
Vertex furthest_vertex(const Graph& g, Vertex v);

/// Iterates furthest-vertex hops until the step distance stops increasing,
/// which certifies the last two vertices as a mutually distant pair
/// (d(x,y) = e(x) = e(y)). One BFS per sequence vertex.
SweepTrace mutually_distant_pair(const Graph& g, Vertex start);

/// x = furthest from z, y = furthest from x; two BFS.
std::pair<Vertex, Vertex> beam(const Graph& g, Vertex z);

/// Path vertex at index floor(length/2) from the first endpoint.
Vertex middle_vertex(const PathInGraph& path);

}  // namespace hyperterrain
