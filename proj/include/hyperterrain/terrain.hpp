#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperterrain/exact.hpp"
#include "hyperterrain/graph.hpp"

namespace hyperterrain {

enum class EdgeClass { Up, Horizontal, Down };
enum class SegmentLabel { UpHill, DownHill, Plain };
/// Interior plains are classified by their flanking edges; plains touching a
/// path endpoint have no second flank and stay Boundary.
enum class PlainKind { Plateau, Valley, Terrace, Boundary };

struct TerrainSegment {
    int start = 0;   // first edge index of the m-segment
    int length = 0;  // edge count = hill height / plain width
    SegmentLabel label = SegmentLabel::Plain;
    std::optional<PlainKind> plain_kind;
};

struct TerrainSegmentation {
    PathInGraph path;
    std::vector<EdgeClass> classes;       // per edge, walking front -> back
    std::vector<TerrainSegment> segments;
    int up_edges = 0;
    int horizontal_edges = 0;
    int down_edges = 0;
};

enum class PathKind { General, EndMinimal, StrictEndMinimal };

const char* edge_class_name(EdgeClass c);
const char* segment_label_name(SegmentLabel l);
const char* plain_kind_name(PlainKind k);
const char* path_kind_name(PathKind k);

/// Classifies and segments a shortest path; walking direction is
/// path.front() -> path.back(). Validates shortestness (one BFS).
TerrainSegmentation segment_path(const Graph& g, const EccentricityProfile& prof, const PathInGraph& path);

namespace detail {
/// Same construction without the shortest-path check, for paths that are
/// shortest by construction (enumerators, canonical walks).
TerrainSegmentation segment_path_unchecked(const EccentricityProfile& prof, const PathInGraph& path);
}  // namespace detail

/// Strongest applicable kind: back() has strictly minimum eccentricity ->
/// StrictEndMinimal, weakly minimum -> EndMinimal, else General.
PathKind classify_path_kind(const EccentricityProfile& prof, const PathInGraph& path);

struct EdgeCountIdentities {
    int lhs1 = 0;  // D - U
    int rhs1 = 0;  // e(front) - e(back)
    int lhs2 = 0;  // 2U + H
    int rhs2 = 0;  // d(front, back) - (e(front) - e(back))
};

EdgeCountIdentities edge_count_identities(const TerrainSegmentation& seg, const EccentricityProfile& prof);

struct PathLocalityStats {
    int count_loc_gt1 = 0;          // path vertices with locality > 1
    int count_outside_cdelta = 0;   // ... of those, outside C_{<=delta}
    int count_far_from_center = 0;  // ... of those, at distance > 2*delta from C(G)
};

/// delta2 is the doubled hyperbolicity; dist_to_center may be precomputed
/// (multi-source BFS from prof.center), otherwise it is derived here.
PathLocalityStats path_locality_stats(const Graph& g, const EccentricityProfile& prof, const LocalityMap& loc,
                                      const PathInGraph& path, int delta2,
                                      std::span<const std::int32_t> dist_to_center = {});

/// One character per edge: '/' up, '\' down, '-' plain, '_' valley plain.
std::string render_strip(const TerrainSegmentation& seg);

}  // namespace hyperterrain
