#include "hyperterrain/json_out.hpp"

namespace hyperterrain {

using nlohmann::json;

json oracle_json(const Graph& g, const EccentricityProfile& prof,
                 const std::optional<HyperbolicityCertificate>& hyp) {
    json j;
    j["rad"] = prof.rad;
    j["diam"] = prof.diam;
    if (hyp) {
        j["delta2"] = hyp->delta2;
        json w = json::array();
        for (Vertex v : hyp->witness) w.push_back(g.label(v));
        j["delta2_witness"] = std::move(w);
    } else {
        j["delta2"] = nullptr;
    }
    j["ecc"] = prof.ecc;
    json center = json::array();
    for (Vertex v : prof.center) center.push_back(g.label(v));
    j["center"] = std::move(center);
    json labels = json::array();
    for (Label l : g.labels()) labels.push_back(l);
    j["labels"] = std::move(labels);
    return j;
}

json sweep_trace_json(const Graph& g, const SweepTrace& trace) {
    json j;
    json seq = json::array();
    for (Vertex v : trace.sequence) seq.push_back(g.label(v));
    j["sequence"] = std::move(seq);
    j["dists"] = trace.dists;
    j["mutually_distant"] = trace.mutually_distant;
    j["x"] = g.label(trace.x());
    j["y"] = g.label(trace.y());
    return j;
}

json approx_json(const Graph& g, const ApproxEccentricities& est) {
    json j;
    j["method"] = method_name(est.method);
    json anchors;
    if (est.anchor_x >= 0) anchors["x"] = g.label(est.anchor_x);
    if (est.anchor_y >= 0) anchors["y"] = g.label(est.anchor_y);
    if (est.anchor_c >= 0) anchors["c"] = g.label(est.anchor_c);
    j["anchors"] = std::move(anchors);
    j["est"] = est.est;
    j["guarantee"] = {{"side", guarantee_side(est.method)}, {"additive", guarantee_additive(est.method)}};
    if (est.method == ApproxMethod::TreeFastK) j["k"] = est.k;
    json labels = json::array();
    for (Label l : g.labels()) labels.push_back(l);
    j["labels"] = std::move(labels);
    return j;
}

json segmentation_json(const Graph& g, const TerrainSegmentation& seg) {
    json j;
    json path = json::array();
    for (Vertex v : seg.path.vertices) path.push_back(g.label(v));
    j["path"] = std::move(path);
    json classes = json::array();
    for (EdgeClass c : seg.classes) classes.push_back(edge_class_name(c));
    j["classes"] = std::move(classes);
    json segments = json::array();
    for (const TerrainSegment& s : seg.segments) {
        json sj;
        sj["start"] = s.start;
        sj["length"] = s.length;
        sj["label"] = segment_label_name(s.label);
        if (s.plain_kind) sj["plain_kind"] = plain_kind_name(*s.plain_kind);
        segments.push_back(std::move(sj));
    }
    j["segments"] = std::move(segments);
    j["counts"] = {{"up", seg.up_edges}, {"horizontal", seg.horizontal_edges}, {"down", seg.down_edges}};
    j["strip"] = render_strip(seg);
    return j;
}

}  // namespace hyperterrain
