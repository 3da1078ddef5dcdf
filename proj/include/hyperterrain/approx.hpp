#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperterrain/extremal.hpp"
#include "hyperterrain/graph.hpp"

namespace hyperterrain {

/// BFS spanning tree as a parent array; parent[root] == root. Root distances
/// in the tree equal root distances in the graph.
struct SpanningTree {
    Vertex root = 0;
    std::vector<Vertex> parent;
};

enum class ApproxMethod { PairLeft, TreeMiddle, TreeFastK };

struct ApproxEccentricities {
    std::vector<int> est;
    ApproxMethod method = ApproxMethod::PairLeft;
    int k = 0;                // TreeFastK parameter
    Vertex anchor_x = -1;     // extremal pair used
    Vertex anchor_y = -1;
    Vertex anchor_c = -1;     // BFS-tree root (tree methods)
    // First sweep step (1-based over dists) whose furthest distance did not
    // grow; certifies an early mutually distant pair in the tree_fast sweep.
    int stall_index = -1;
};

const char* method_name(ApproxMethod m);
/// Guarantee metadata: left-sided "2d" / right-sided "4d+1" / "6d+1-k".
std::string guarantee_side(ApproxMethod m);
std::string guarantee_additive(ApproxMethod m);

/// BFS tree with the smallest-id parent rule: parent[v] is the least neighbor
/// of v whose root distance is one smaller.
SpanningTree bfs_tree(const Graph& g, Vertex root);
void validate_spanning_tree(const Graph& g, const SpanningTree& t);

/// All tree eccentricities in linear time via the tree center:
/// e_T(v) = d_T(v, C(T)) + rad(T).
std::vector<int> tree_eccentricities(const Graph& g, const SpanningTree& t);

/// e^(v) = max{d(x,v), d(y,v)} for the mutually distant terminal pair of the
/// trace; never above e(v), never more than 2*delta below.
ApproxEccentricities approx_pair_left(const Graph& g, const SweepTrace& trace);

/// BFS tree rooted at the middle of the canonical shortest path between the
/// trace's mutually distant pair; e_T within [e, e + 4*delta + 1].
std::pair<SpanningTree, ApproxEccentricities> approx_tree_middle(const Graph& g, const SweepTrace& trace);

/// Sweep u_0 = start .. u_{k+2}; root the BFS tree at the middle of the
/// canonical (u_{k+1}, u_{k+2})-path; e_T within [e, e + 6*delta + 1 - k]
/// for k <= 2*delta.
std::pair<SpanningTree, ApproxEccentricities> approx_tree_fast(const Graph& g, Vertex start, int k);

enum class EnclosureMode { Beam, MutuallyDistant };

/// D(c, 5*delta+1+k) for beams, D(c, 4*delta+1+k) for mutually distant pairs;
/// guaranteed superset of C_{<=k}. delta2 is the doubled hyperbolicity.
std::vector<Vertex> center_enclosure(const Graph& g, Vertex c, EnclosureMode mode, int k,
                                     std::optional<int> delta2);
int enclosure_radius(EnclosureMode mode, int k, int delta2);

struct RadiusDiameterEstimates {
    int rad_ub_fast = 0;   // e(middle of beam), O(m)
    Vertex beam_middle = -1;
    Vertex beam_x = -1, beam_y = -1;
    int rad_ub_tight = 0;  // e(middle of mutually distant pair), O(delta * m)
    Vertex mutual_middle = -1;
    int diam_lb = 0;       // distance of the mutually distant pair
    Vertex pair_x = -1, pair_y = -1;
};

RadiusDiameterEstimates radius_diameter_estimates(const Graph& g, Vertex start = 0);

}  // namespace hyperterrain
