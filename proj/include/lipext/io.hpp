#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lipext/gluing.hpp"
#include "lipext/metric.hpp"
#include "lipext/moduli.hpp"

namespace lipext {

using nlohmann::json;

// Shortest round-tripping decimal representation.
std::string format_double(double value);

// ============================================================
// Instance files
// ============================================================
// One of:
//   {"metric": {"dist": [[...]], "labels": [...]}}
//   {"points": [[...]], "p": 2}
//   {"graph": {"n": k, "edges": [[u, v, w], ...]}}

struct Instance {
  std::string id;
  FiniteMetricSpace space;
  // Present when the instance came from a point cloud; lets callers build
  // coordinate-restriction maps.
  std::optional<std::vector<std::vector<double>>> points;
};

Instance instance_from_json(const json& j, const std::string& default_id = "");
json metric_instance_json(const FiniteMetricSpace& space);
json points_instance_json(const std::vector<std::vector<double>>& points,
                          double p);
json graph_instance_json(const std::vector<WeightedEdge>& edges, int n);

// ============================================================
// Targets and maps
// ============================================================
// Target: {"kind": "euclidean", "dim": d} | {"kind": "real_line"}
//       | {"kind": "finite", "metric": {...}}
// The parser additionally accepts {"kind": "uniform", "points": k,
// "distance": d} as a shorthand for the uniform finite target.
json target_to_json(const TargetSpace& target);
TargetSpace target_from_json(const json& j);

// Map: {"domain": [...], "values": [[...], ...] | [i, ...], "target": {...}}
json map_to_json(const PartialMap& map);
PartialMap map_from_json(const json& j,
                         std::shared_ptr<const FiniteMetricSpace> source);

// ============================================================
// Results
// ============================================================
json extension_to_json(const ExtensionResult& result);
json trace_to_json(const GluingTrace& trace);
json modulus_to_json(const ModulusResult& result);
json claim1_to_json(const Claim1Check& check);

// FNV-1a digest of a canonical JSON dump, as 16 hex characters.
std::string witness_digest(const json& j);

}  // namespace lipext
