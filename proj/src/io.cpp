#include "lipext/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "lipext/instances.hpp"
#include "lipext/rng.hpp"

namespace lipext {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

// ============================================================
// Instances
// ============================================================

namespace {

std::vector<std::vector<double>> matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error("distance matrix must be an array of rows");
  return j.get<std::vector<std::vector<double>>>();
}

}  // namespace

Instance instance_from_json(const json& j, const std::string& default_id) {
  Instance out;
  out.id = j.value("id", default_id);
  if (j.contains("metric")) {
    const auto& m = j.at("metric");
    std::vector<std::string> labels;
    if (m.contains("labels")) {
      labels = m.at("labels").get<std::vector<std::string>>();
    }
    out.space = validate_metric(matrix_from_json(m.at("dist")),
                                std::move(labels));
    return out;
  }
  if (j.contains("points")) {
    auto points = j.at("points").get<std::vector<std::vector<double>>>();
    double p = 2.0;
    if (j.contains("p")) {
      if (j.at("p").is_string()) {
        if (j.at("p").get<std::string>() != "inf") {
          throw Error("p must be a number >= 1 or \"inf\"");
        }
        p = std::numeric_limits<double>::infinity();
      } else {
        p = j.at("p").get<double>();
      }
    }
    out.space = points_to_metric(points, p);
    out.points = std::move(points);
    return out;
  }
  if (j.contains("graph")) {
    const auto& g = j.at("graph");
    const int n = g.at("n").get<int>();
    std::vector<WeightedEdge> edges;
    for (const auto& e : g.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) {
        throw Error("edge must be [u, v] or [u, v, w]");
      }
      WeightedEdge edge;
      edge.u = e[0].get<int>();
      edge.v = e[1].get<int>();
      edge.weight = e.size() == 3 ? e[2].get<double>() : 1.0;
      edges.push_back(edge);
    }
    out.space = graph_metric(edges, n);
    return out;
  }
  throw Error("instance needs one of: metric, points, graph");
}

json metric_instance_json(const FiniteMetricSpace& space) {
  json m;
  m["dist"] = space.matrix();
  if (!space.labels().empty()) m["labels"] = space.labels();
  return json{{"metric", m}};
}

json points_instance_json(const std::vector<std::vector<double>>& points,
                          double p) {
  json j;
  j["points"] = points;
  if (std::isinf(p)) {
    j["p"] = "inf";
  } else {
    j["p"] = p;
  }
  return j;
}

json graph_instance_json(const std::vector<WeightedEdge>& edges, int n) {
  json list = json::array();
  for (const auto& e : edges) {
    list.push_back(json::array({e.u, e.v, e.weight}));
  }
  return json{{"graph", {{"n", n}, {"edges", list}}}};
}

// ============================================================
// Targets and maps
// ============================================================

json target_to_json(const TargetSpace& target) {
  switch (target.kind()) {
    case TargetSpace::Kind::Euclidean:
      return json{{"kind", "euclidean"}, {"dim", target.dim()}};
    case TargetSpace::Kind::RealLine:
      return json{{"kind", "real_line"}};
    case TargetSpace::Kind::Finite: {
      json m;
      m["dist"] = target.finite_space().matrix();
      if (!target.finite_space().labels().empty()) {
        m["labels"] = target.finite_space().labels();
      }
      return json{{"kind", "finite"}, {"metric", m}};
    }
  }
  throw Error("unknown target kind");
}

TargetSpace target_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "euclidean") {
    return TargetSpace::euclidean(j.at("dim").get<int>());
  }
  if (kind == "real_line") {
    return TargetSpace::real_line();
  }
  if (kind == "finite") {
    const auto& m = j.at("metric");
    std::vector<std::string> labels;
    if (m.contains("labels")) {
      labels = m.at("labels").get<std::vector<std::string>>();
    }
    return TargetSpace::finite(
        validate_metric(matrix_from_json(m.at("dist")), std::move(labels)));
  }
  if (kind == "uniform") {
    return TargetSpace::finite(uniform_space(j.at("points").get<int>(),
                                             j.value("distance", 1.0)));
  }
  throw Error("unknown target kind: " + kind);
}

json map_to_json(const PartialMap& map) {
  json j;
  j["domain"] = map.domain();
  if (map.vector_valued()) {
    j["values"] = map.vector_values();
  } else {
    j["values"] = map.point_values();
  }
  j["target"] = target_to_json(map.target());
  return j;
}

PartialMap map_from_json(const json& j,
                         std::shared_ptr<const FiniteMetricSpace> source) {
  auto target = target_from_json(j.at("target"));
  auto domain = j.at("domain").get<std::vector<int>>();
  if (target.vector_valued()) {
    return PartialMap(std::move(source), std::move(target), std::move(domain),
                      j.at("values").get<std::vector<std::vector<double>>>());
  }
  return PartialMap(std::move(source), std::move(target), std::move(domain),
                    j.at("values").get<std::vector<int>>());
}

// ============================================================
// Results
// ============================================================

namespace {

std::string optimality_name(Optimality o) {
  switch (o) {
    case Optimality::Exact:
      return "exact";
    case Optimality::UpperBound:
      return "upper_bound";
    case Optimality::Heuristic:
      return "heuristic";
  }
  return "unknown";
}

}  // namespace

json extension_to_json(const ExtensionResult& result) {
  json j;
  j["map"] = map_to_json(result.map);
  j["constant"] = result.constant;
  j["optimality"] = optimality_name(result.optimality);
  j["gap"] = result.gap;
  j["iterations"] = result.iterations;
  return j;
}

json trace_to_json(const GluingTrace& trace) {
  json j;
  j["delta"] = trace.delta;
  j["subset"] = trace.subset;
  j["xs"] = trace.xs;
  j["ys"] = trace.ys;
  j["lip_phi"] = trace.lip_phi;
  j["psi"] = extension_to_json(trace.psi);
  j["psi_constant"] = trace.psi_constant;
  j["glued"] = map_to_json(trace.glued);
  j["achieved"] = trace.achieved;
  j["certified_bound"] = trace.certified_bound;
  if (trace.paper_k) j["paper_k"] = *trace.paper_k;
  if (trace.paper_bound) j["paper_bound"] = *trace.paper_bound;
  json classes = json::array();
  for (const auto& c : trace.pair_classes) {
    classes.push_back(json{{"name", c.name},
                           {"a", c.a},
                           {"b", c.b},
                           {"worst_ratio", c.worst_ratio},
                           {"bound", c.bound}});
  }
  j["pair_classes"] = classes;
  j["oracle"] = oracle_name(trace.oracle);
  return j;
}

json modulus_to_json(const ModulusResult& result) {
  json j;
  j["value"] = result.value;
  j["exact"] = result.exact;
  if (result.witness_phi) {
    j["witness_phi"] = map_to_json(*result.witness_phi);
  }
  j["witness_subset"] = result.witness_subset;
  if (!result.witness_xs.empty()) j["witness_xs"] = result.witness_xs;
  j["scanned"] = json{{"subsets", result.scanned.subsets},
                      {"maps", result.scanned.maps},
                      {"extensions", result.scanned.extensions}};
  return j;
}

json claim1_to_json(const Claim1Check& check) {
  json j;
  j["e_up_n"] = modulus_to_json(check.e_up_result);
  j["e_n"] = modulus_to_json(check.e_n_result);
  j["e_up_value"] = check.e_up_value;
  j["e_n_value"] = check.e_n_value;
  j["slack"] = check.slack;
  return j;
}

std::string witness_digest(const json& j) {
  const std::uint64_t h = fnv1a64(j.dump());
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace lipext
