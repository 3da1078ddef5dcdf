#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperterrain/exact.hpp"
#include "hyperterrain/graph.hpp"

namespace hyperterrain {

struct PseudoconvexityReport {
    int beta_min = 0;  // smallest beta for which the set is beta-pseudoconvex
    // (x, y, z) maximizing min{d(z,x), d(z,y)} over z in I(x,y)\S;
    // lexicographically smallest such triple. Witnesses every beta < beta_min.
    std::optional<std::array<Vertex, 3>> witness;
    bool exact = true;  // false when the member cap forced stride sampling
};

/// beta_min = max over x,y in S and z in I(x,y)\S of min{d(z,x), d(z,y)}
/// (0 when no such z, i.e. the set is convex). Sets larger than member_cap
/// are stride-sampled and the result marked inexact (a lower bound).
PseudoconvexityReport pseudoconvexity_beta(const Graph& g, std::span<const Vertex> s,
                                           int member_cap = 2000);
PseudoconvexityReport pseudoconvexity_beta(const DistanceMatrix& dm, std::span<const Vertex> s,
                                           int member_cap = 2000);

/// Smallest eps with I(x,y) contained in D(S, eps) for all x,y in S.
int quasiconvexity_eps(const Graph& g, std::span<const Vertex> s, int member_cap = 2000);
int quasiconvexity_eps(const DistanceMatrix& dm, std::span<const std::int32_t> dist_to_s,
                       std::span<const Vertex> s, int member_cap = 2000);

struct LayerConvexityResult {
    int k = 0;
    int size = 0;
    int beta_min = 0;
    bool pseudo_ok = false;   // beta_min <= max(0, 2*delta - 1)
    int set_diam = 0;
    int diam_bound = 0;       // 2k + 4*delta + 1
    bool diam_ok = false;
    std::optional<std::array<Vertex, 3>> witness;
};

/// Checks every realized layer set C_{<=k}: (2*delta-1)-pseudoconvexity
/// (convexity when delta <= 1/2) and diam(C_{<=k}) <= 2k + 4*delta + 1.
std::vector<LayerConvexityResult> check_layer_pseudoconvexity(const DistanceMatrix& dm,
                                                              const EccentricityProfile& prof, int delta2);

struct DiskConvexityResult {
    Vertex center = 0;
    int radius = 0;
    int beta_min = 0;
    bool ok = false;
    std::optional<std::array<Vertex, 3>> witness;
};

/// Samples (center, radius) disks with the library PRNG and checks each is
/// (2*delta-1)-pseudoconvex.
std::vector<DiskConvexityResult> check_disk_pseudoconvexity(const DistanceMatrix& dm,
                                                            const EccentricityProfile& prof, int delta2,
                                                            int samples, std::uint64_t seed);

}  // namespace hyperterrain
