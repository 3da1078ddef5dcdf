#pragma once

#include <cstdint>
#include <functional>

#include "hyperterrain/exact.hpp"
#include "hyperterrain/graph.hpp"
#include "hyperterrain/prng.hpp"

namespace hyperterrain {

/// Enumerates every shortest (x,y)-path in lexicographic vertex order by DFS
/// over the BFS dag, spending `budget` path emissions at most; returns false
/// when the budget ran out before the pair was exhausted. visit may return
/// false to abort early.
bool for_each_shortest_path(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                            std::int64_t& budget, const std::function<bool(const PathInGraph&)>& visit);

/// One shortest path drawn by a uniform random descent of the BFS dag.
PathInGraph sample_shortest_path(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y,
                                 SplitMix64& rng);

/// canonical_shortest_path against a matrix row instead of a fresh BFS.
PathInGraph canonical_path_from_matrix(const Graph& g, const DistanceMatrix& dm, Vertex from, Vertex to);

}  // namespace hyperterrain
