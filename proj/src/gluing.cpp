#include "lipext/gluing.hpp"

#include <algorithm>
#include <cmath>

namespace lipext {

std::string oracle_name(OracleKind kind) {
  switch (kind) {
    case OracleKind::McShane:
      return "mcshane";
    case OracleKind::Euclidean:
      return "euclidean";
    case OracleKind::BruteForce:
      return "brute";
  }
  return "unknown";
}

OracleKind oracle_from_name(const std::string& name) {
  if (name == "mcshane") return OracleKind::McShane;
  if (name == "euclidean") return OracleKind::Euclidean;
  if (name == "brute") return OracleKind::BruteForce;
  throw Error("unknown oracle: " + name);
}

std::vector<int> select_near_nearest(const FiniteMetricSpace& space,
                                     const std::vector<int>& subset,
                                     const std::vector<int>& xs, double delta,
                                     bool perturb) {
  if (delta < 0.0) throw Error("delta must be >= 0");
  auto s = canonical_index_set(subset, space.size(), "subset");
  if (s.empty()) throw Error("empty subset");
  std::vector<int> ys;
  ys.reserve(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const int x = xs[j];
    if (std::binary_search(s.begin(), s.end(), x)) {
      throw Error("x[" + std::to_string(j) + "] = " + std::to_string(x) +
                  " lies in the subset");
    }
    const auto near = distance_to_subset(space, s, x);
    int pick = near.nearest;
    if (perturb && delta > 0.0) {
      const double allowance = (1.0 + delta) * near.distance;
      for (int cand : s) {  // ascending, so the last hit is the largest index
        if (space.dist(x, cand) <= allowance) pick = cand;
      }
    }
    ys.push_back(pick);
  }
  return ys;
}

PartialMap glue(const PartialMap& phi, const ExtensionResult& psi) {
  const PartialMap& inner = psi.map;
  if (phi.source_ptr() != inner.source_ptr() &&
      !phi.source().same_distances(inner.source())) {
    throw Error("domain mismatch: maps live on different spaces");
  }
  if (!(phi.target() == inner.target())) {
    throw Error("domain mismatch: maps have different targets");
  }

  // Agreement check on the shared points, exact by construction of every
  // solver.
  int anchor_index = 0;
  for (int pos = 0; pos < inner.domain_size(); ++pos) {
    const int point = inner.domain()[pos];
    auto phi_pos = phi.position_of(point);
    if (!phi_pos) continue;
    ++anchor_index;
    if (!inner.same_value(pos, phi, *phi_pos)) {
      double discrepancy;
      if (phi.vector_valued()) {
        discrepancy =
            lp_distance(inner.vector_value(pos), phi.vector_value(*phi_pos),
                        2.0);
      } else {
        discrepancy = phi.target().finite_space().dist(
            inner.point_value(pos), phi.point_value(*phi_pos));
      }
      throw AgreementViolation(anchor_index, point, discrepancy);
    }
  }

  std::vector<int> domain = phi.domain();
  for (int point : inner.domain()) {
    if (!phi.position_of(point)) domain.push_back(point);
  }
  std::sort(domain.begin(), domain.end());

  if (phi.vector_valued()) {
    std::vector<std::vector<double>> values;
    values.reserve(domain.size());
    for (int point : domain) {
      if (auto pos = phi.position_of(point)) {
        values.push_back(phi.vector_value(*pos));
      } else {
        values.push_back(inner.vector_value(*inner.position_of(point)));
      }
    }
    return PartialMap(phi.source_ptr(), phi.target(), std::move(domain),
                      std::move(values));
  }
  std::vector<int> values;
  values.reserve(domain.size());
  for (int point : domain) {
    if (auto pos = phi.position_of(point)) {
      values.push_back(phi.point_value(*pos));
    } else {
      values.push_back(inner.point_value(*inner.position_of(point)));
    }
  }
  return PartialMap(phi.source_ptr(), phi.target(), std::move(domain),
                    std::move(values));
}

double claim1_bound(double lip_phi, double psi_constant, double delta) {
  if (lip_phi < 0.0 || psi_constant < 0.0 || delta < 0.0) {
    throw Error("claim1_bound needs nonnegative inputs");
  }
  return (2.0 + delta) * lip_phi + (1.0 + delta) * psi_constant;
}

namespace {

ExtensionResult run_oracle(const PartialMap& restricted,
                           const std::vector<int>& to,
                           const GluingOptions& options) {
  switch (options.oracle) {
    case OracleKind::McShane:
      return mcshane_extend(restricted, to);
    case OracleKind::Euclidean: {
      EuclideanExtendOptions eopts;
      eopts.budget = options.budget;
      eopts.tol = options.tol;
      return euclidean_extend(restricted, to, eopts);
    }
    case OracleKind::BruteForce:
      return brute_force_extend(restricted, to, options.cap);
  }
  throw Error("unknown oracle");
}

}  // namespace

GluingTrace run_claim1(const PartialMap& phi, const std::vector<int>& xs,
                       const GluingOptions& options) {
  const auto& space = phi.source();
  const auto& subset = phi.domain();
  if (subset.empty()) throw Error("empty subset");
  const auto xs_sorted = canonical_index_set(xs, space.size(), "new points");

  const auto ys = select_near_nearest(space, subset, xs_sorted, options.delta,
                                      options.perturb);
  // Eq.-style selection certificate: d(y_j, x_j) <= (1+delta) d(x_j, S).
  for (std::size_t j = 0; j < xs_sorted.size(); ++j) {
    const double lhs = space.dist(ys[j], xs_sorted[j]);
    const double rhs =
        (1.0 + options.delta) *
        distance_to_subset(space, subset, xs_sorted[j]).distance;
    if (lhs > rhs + kTol) {
      throw CertificationFailure("anchor selection", ys[j], xs_sorted[j], lhs,
                                 rhs);
    }
  }

  const double lip = lipschitz_constant(phi).constant;

  std::vector<int> anchors = ys;
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

  std::vector<int> psi_domain = anchors;
  psi_domain.insert(psi_domain.end(), xs_sorted.begin(), xs_sorted.end());
  std::sort(psi_domain.begin(), psi_domain.end());

  const PartialMap on_anchors = phi.restricted(anchors);
  const ExtensionResult psi = run_oracle(on_anchors, psi_domain, options);
  const double psi_constant = psi.constant;

  PartialMap glued = glue(phi, psi);
  const double achieved = lipschitz_constant(glued).constant;
  const double certified = claim1_bound(lip, psi_constant, options.delta);

  GluingTrace trace{options.delta,
                    subset,
                    xs_sorted,
                    ys,
                    lip,
                    psi,
                    psi_constant,
                    std::move(glued),
                    achieved,
                    certified,
                    options.paper_k,
                    std::nullopt,
                    {},
                    options.oracle};

  if (options.paper_k) {
    const double k = *options.paper_k;
    const double dl = options.delta;
    trace.paper_bound = (2.0 + dl + (1.0 + dl) * (1.0 + dl) * k) * lip;
    // When the inner extension is no worse than the worst case (1+delta)KL,
    // the sharp bound implies the worst-case form.
    if (psi_constant <= (1.0 + dl) * k * lip &&
        certified > *trace.paper_bound + kTol) {
      throw CertificationFailure("paper-form bound", -1, -1, certified,
                                 *trace.paper_bound);
    }
  }

  // Classify every pair of the glued domain and certify its class bound:
  // pairs inside S are L-Lipschitz, pairs inside psi's domain are
  // C_psi-Lipschitz, and the mixed pairs obey the glued bound.
  trace.pair_classes[0].name = "within_subset";
  trace.pair_classes[0].bound = lip;
  trace.pair_classes[1].name = "within_psi_domain";
  trace.pair_classes[1].bound = psi_constant;
  trace.pair_classes[2].name = "cross";
  trace.pair_classes[2].bound = certified;

  const auto& domain = trace.glued.domain();
  const auto in = [](const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };
  for (int a = 0; a < trace.glued.domain_size(); ++a) {
    for (int b = a + 1; b < trace.glued.domain_size(); ++b) {
      const int pa = domain[a];
      const int pb = domain[b];
      const double ratio =
          trace.glued.value_distance(a, b) / space.dist(pa, pb);
      const bool a_in_s = in(subset, pa);
      const bool b_in_s = in(subset, pb);
      int cls;
      if (a_in_s && b_in_s) {
        cls = 0;
      } else if (in(psi_domain, pa) && in(psi_domain, pb)) {
        cls = 1;
      } else {
        cls = 2;
      }
      auto& report = trace.pair_classes[cls];
      if (report.a < 0 || ratio > report.worst_ratio) {
        report.a = pa;
        report.b = pb;
        report.worst_ratio = ratio;
      }
      if (ratio > report.bound + kTol) {
        throw CertificationFailure(report.name, pa, pb, ratio, report.bound);
      }
    }
  }

  if (achieved > certified + kTol) {
    throw CertificationFailure("glued bound", -1, -1, achieved, certified);
  }
  return trace;
}

}  // namespace lipext
