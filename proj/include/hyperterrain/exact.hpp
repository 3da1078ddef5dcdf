#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperterrain/graph.hpp"

namespace hyperterrain {

/// Size caps for the brute-force oracle; overridable from the CLI. The matrix
/// cap bounds memory (n^2 uint16), the delta cap bounds the C(n,4) quadruple
/// scan.
struct OracleLimits {
    std::int32_t matrix_cap = 20000;
    std::int32_t delta_cap = 400;
};

class DistanceMatrix {
public:
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }
    int at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    void set(Vertex u, Vertex v, int value) { d_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint16_t>(value); }
    std::span<const std::uint16_t> row(Vertex u) const { return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)}; }

private:
    int n_;
    std::vector<std::uint16_t> d_;
};

struct EccentricityProfile {
    std::vector<int> ecc;
    int rad = 0;
    int diam = 0;
    std::vector<Vertex> center;  // ascending ids
    std::vector<int> layer;      // ecc[v] - rad
};

struct HyperbolicityCertificate {
    int delta2 = 0;                      // doubled hyperbolicity 2*delta
    std::array<Vertex, 4> witness{};     // lexicographically first maximizing quadruple
};

struct LocalityMap {
    std::vector<int> loc;  // 0 exactly for central vertices
};

DistanceMatrix all_pairs_distances(const Graph& g, const OracleLimits& limits = {}, int threads = 0);

EccentricityProfile eccentricity_profile(const Graph& g, const DistanceMatrix& dm);
/// Streaming variant (n BFS, O(n) memory); same result as the matrix route.
EccentricityProfile eccentricity_profile(const Graph& g, const OracleLimits& limits = {}, int threads = 0);

std::vector<Vertex> furthest_set(const DistanceMatrix& dm, Vertex v);
std::vector<Vertex> furthest_set(const Graph& g, Vertex v);

LocalityMap locality_map(const Graph& g, const EccentricityProfile& prof);

/// Exact 2*delta over all C(n,4) quadruples: max of (largest sum - second
/// largest sum) of the three pairwise distance sums.
HyperbolicityCertificate hyperbolicity_exact(const DistanceMatrix& dm, const OracleLimits& limits = {},
                                             int threads = 0);
HyperbolicityCertificate hyperbolicity_exact(const Graph& g, const OracleLimits& limits = {}, int threads = 0);

/// The three distance sums of a quadruple, and their largest-minus-second gap.
int quadruple_gap(int duv, int dwx, int duw, int dvx, int dux, int dvw);

}  // namespace hyperterrain
