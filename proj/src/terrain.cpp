#include "hyperterrain/terrain.hpp"

#include <algorithm>

namespace hyperterrain {

const char* edge_class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::Up: return "up";
        case EdgeClass::Horizontal: return "horizontal";
        case EdgeClass::Down: return "down";
    }
    return "?";
}

const char* segment_label_name(SegmentLabel l) {
    switch (l) {
        case SegmentLabel::UpHill: return "up_hill";
        case SegmentLabel::DownHill: return "down_hill";
        case SegmentLabel::Plain: return "plain";
    }
    return "?";
}

const char* plain_kind_name(PlainKind k) {
    switch (k) {
        case PlainKind::Plateau: return "plateau";
        case PlainKind::Valley: return "valley";
        case PlainKind::Terrace: return "terrace";
        case PlainKind::Boundary: return "boundary";
    }
    return "?";
}

const char* path_kind_name(PathKind k) {
    switch (k) {
        case PathKind::General: return "general";
        case PathKind::EndMinimal: return "end_minimal";
        case PathKind::StrictEndMinimal: return "strict_end_minimal";
    }
    return "?";
}

namespace detail {

TerrainSegmentation segment_path_unchecked(const EccentricityProfile& prof, const PathInGraph& path) {
    TerrainSegmentation seg;
    seg.path = path;
    const int len = path.length();
    seg.classes.reserve(len);
    for (int i = 0; i < len; ++i) {
        const int eu = prof.ecc[path.vertices[i]];
        const int ev = prof.ecc[path.vertices[i + 1]];
        EdgeClass c = eu < ev ? EdgeClass::Up : (eu == ev ? EdgeClass::Horizontal : EdgeClass::Down);
        seg.classes.push_back(c);
        if (c == EdgeClass::Up) ++seg.up_edges;
        else if (c == EdgeClass::Horizontal) ++seg.horizontal_edges;
        else ++seg.down_edges;
    }

    for (int i = 0; i < len;) {
        int j = i;
        while (j < len && seg.classes[j] == seg.classes[i]) ++j;
        TerrainSegment s;
        s.start = i;
        s.length = j - i;
        switch (seg.classes[i]) {
            case EdgeClass::Up: s.label = SegmentLabel::UpHill; break;
            case EdgeClass::Down: s.label = SegmentLabel::DownHill; break;
            case EdgeClass::Horizontal: {
                s.label = SegmentLabel::Plain;
                // plateau/valley/terrace need both flanking edges
                if (i > 0 && j < len) {
                    const bool in_up = seg.classes[i - 1] == EdgeClass::Up;
                    const bool out_down = seg.classes[j] == EdgeClass::Down;
                    if (in_up && out_down) s.plain_kind = PlainKind::Plateau;
                    else if (!in_up && !out_down) s.plain_kind = PlainKind::Valley;
                    else s.plain_kind = PlainKind::Terrace;
                } else {
                    s.plain_kind = PlainKind::Boundary;
                }
                break;
            }
        }
        seg.segments.push_back(s);
        i = j;
    }
    return seg;
}

}  // namespace detail

TerrainSegmentation segment_path(const Graph& g, const EccentricityProfile& prof, const PathInGraph& path) {
    if (path.vertices.empty() || !is_shortest_path(g, path)) {
        fail(ErrorCode::NotAShortestPath, "segment_path: input is not a shortest path");
    }
    return detail::segment_path_unchecked(prof, path);
}

PathKind classify_path_kind(const EccentricityProfile& prof, const PathInGraph& path) {
    const int e_end = prof.ecc[path.back()];
    bool strict = true, weak = true;
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const int e = prof.ecc[path.vertices[i]];
        if (e < e_end) weak = false;
        if (e <= e_end) strict = false;
    }
    if (!weak) return PathKind::General;
    return strict ? PathKind::StrictEndMinimal : PathKind::EndMinimal;
}

EdgeCountIdentities edge_count_identities(const TerrainSegmentation& seg, const EccentricityProfile& prof) {
    EdgeCountIdentities id;
    const int e_front = prof.ecc[seg.path.front()];
    const int e_back = prof.ecc[seg.path.back()];
    id.lhs1 = seg.down_edges - seg.up_edges;
    id.rhs1 = e_front - e_back;
    id.lhs2 = 2 * seg.up_edges + seg.horizontal_edges;
    id.rhs2 = seg.path.length() - (e_front - e_back);
    return id;
}

PathLocalityStats path_locality_stats(const Graph& g, const EccentricityProfile& prof, const LocalityMap& loc,
                                      const PathInGraph& path, int delta2,
                                      std::span<const std::int32_t> dist_to_center) {
    std::vector<std::int32_t> own;
    if (dist_to_center.empty()) {
        own = bfs_multi(g, prof.center);
        dist_to_center = own;
    }
    PathLocalityStats st;
    for (Vertex v : path.vertices) {
        if (loc.loc[v] <= 1) continue;
        ++st.count_loc_gt1;
        // outside C_{<=delta}  <=>  2*(e(v) - rad) > delta2
        if (2 * prof.layer[v] > delta2) ++st.count_outside_cdelta;
        // distance to C(G) more than 2*delta  <=>  d > delta2
        if (dist_to_center[v] > delta2) ++st.count_far_from_center;
    }
    return st;
}

std::string render_strip(const TerrainSegmentation& seg) {
    std::string strip;
    strip.reserve(seg.classes.size());
    for (const TerrainSegment& s : seg.segments) {
        char c = '-';
        if (s.label == SegmentLabel::UpHill) c = '/';
        else if (s.label == SegmentLabel::DownHill) c = '\\';
        else if (s.plain_kind == PlainKind::Valley) c = '_';
        strip.append(static_cast<std::size_t>(s.length), c);
    }
    return strip;
}

}  // namespace hyperterrain
