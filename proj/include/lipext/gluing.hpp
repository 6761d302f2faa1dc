#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lipext/extend.hpp"
#include "lipext/metric.hpp"

namespace lipext {

enum class OracleKind { McShane, Euclidean, BruteForce };

std::string oracle_name(OracleKind kind);
OracleKind oracle_from_name(const std::string& name);

// Worst pair of one class of domain pairs, with the bound that class must
// satisfy. a == b == -1 when the class is empty.
struct PairClassReport {
  std::string name;
  int a = -1;
  int b = -1;
  double worst_ratio = 0.0;
  double bound = 0.0;
};

// Full record of one gluing run: the selected anchors, the inner extension,
// the glued map, and the achieved vs certified constants.
struct GluingTrace {
  double delta = 0.0;
  std::vector<int> subset;  // S
  std::vector<int> xs;      // new points, sorted
  std::vector<int> ys;      // selected anchors, aligned with xs
  double lip_phi = 0.0;     // L, Lipschitz constant of phi on S
  ExtensionResult psi;      // inner extension on {y} u {x}
  double psi_constant = 0.0;
  PartialMap glued;         // phi on S, psi on the x's
  double achieved = 0.0;    // Lipschitz constant of the glued map
  double certified_bound = 0.0;  // (2+delta)*L + (1+delta)*C_psi
  std::optional<double> paper_k;
  std::optional<double> paper_bound;  // (2+delta+(1+delta)^2*K)*L
  std::array<PairClassReport, 3> pair_classes;
  OracleKind oracle = OracleKind::McShane;
};

// For each x_j, an anchor y_j in the subset with
//   d(y_j, x_j) <= (1+delta) * d(x_j, subset).
// The exact nearest point (smallest index on ties) by default; with
// perturb set and delta > 0, the largest-index point satisfying the slack
// condition, which deliberately exercises the inequality chain away from
// the nearest-point choice.
std::vector<int> select_near_nearest(const FiniteMetricSpace& space,
                                     const std::vector<int>& subset,
                                     const std::vector<int>& xs, double delta,
                                     bool perturb = false);

// Piecewise map: phi on its domain, psi on the rest of psi's domain.
// Requires psi to agree with phi exactly where both are defined.
PartialMap glue(const PartialMap& phi, const ExtensionResult& psi);

// (2+delta)*L + (1+delta)*C_psi. Substituting C_psi = (1+delta)*K*L gives
// (2+delta+(1+delta)^2*K)*L.
double claim1_bound(double lip_phi, double psi_constant, double delta);

struct GluingOptions {
  OracleKind oracle = OracleKind::McShane;
  double delta = 0.0;
  bool perturb = false;
  std::optional<double> paper_k;
  std::int64_t budget = 50000;                // Euclidean oracle
  double tol = 1e-9;                          // Euclidean oracle
  std::uint64_t cap = kDefaultEnumerationCap;  // brute-force oracle
};

// The full pipeline: select anchors, extend phi's restriction to them onto
// the new points, glue, measure, and certify every pair class. Throws
// CertificationFailure if any certified inequality fails, which would be an
// implementation bug.
GluingTrace run_claim1(const PartialMap& phi, const std::vector<int>& xs,
                       const GluingOptions& options = {});

}  // namespace lipext
