#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperterrain/graph.hpp"

namespace hyperterrain {

struct Fig3Params {
    int k = 1;  // ladder parameter, k >= 1
    int p = 1;  // pendant path length, p >= 1; the long branches get length k+p
};

/// Graph plus a name -> vertex map for the generator's named landmarks.
struct NamedGraph {
    Graph graph;
    std::vector<std::pair<std::string, Vertex>> names;

    Vertex by_name(const std::string& name) const;
};

/// Ladder-with-branches family: two (x .. y)-paths through u_i and v_i rungs
/// joined by a middle w-path, long branches of length k+p hanging off u_{k+2}
/// and v_{k+2}, and pendant paths of length p at x and y. Vertex ids are
/// assigned in a fixed order (x, u's, y, v's, w's, u-branch, v-branch,
/// x-pendant, y-pendant) so goldens stay stable.
NamedGraph gen_fig3(const Fig3Params& params);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_grid(int rows, int cols);
Graph gen_random_tree(int n, std::uint64_t seed);
Graph gen_gnm_connected(int n, std::int64_t m, std::uint64_t seed);

struct FamilySpec {
    enum class Kind { Path, Cycle, Complete, Grid, RandomTree, GnmConnected, Fig3 };
    Kind kind = Kind::Path;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::uint64_t seed = 0;

    std::string descriptor() const;
};

/// Parses "path(5)", "cycle(6)", "complete(4)", "grid(3,4)",
/// "random_tree(50,7)", "gnm_connected(60,150,3)", "fig3(2,1)".
FamilySpec parse_family(const std::string& text);
Graph gen_family(const FamilySpec& spec);

}  // namespace hyperterrain
