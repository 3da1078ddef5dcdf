#pragma once

#include <optional>

#include "json.hpp"

#include "hyperterrain/approx.hpp"
#include "hyperterrain/exact.hpp"
#include "hyperterrain/extremal.hpp"
#include "hyperterrain/graph.hpp"
#include "hyperterrain/terrain.hpp"

namespace hyperterrain {

/// {"rad":..,"diam":..,"delta2":..,"ecc":[..],"center":[..],"labels":[..]}
nlohmann::json oracle_json(const Graph& g, const EccentricityProfile& prof,
                           const std::optional<HyperbolicityCertificate>& hyp);

nlohmann::json sweep_trace_json(const Graph& g, const SweepTrace& trace);

/// {"method":..,"anchors":{..},"est":[..],"guarantee":{"side":..,"additive":..}}
nlohmann::json approx_json(const Graph& g, const ApproxEccentricities& est);

/// per-edge class array + segment list + strip rendering
nlohmann::json segmentation_json(const Graph& g, const TerrainSegmentation& seg);

}  // namespace hyperterrain
