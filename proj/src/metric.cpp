#include "lipext/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lipext {

// ============================================================
// FiniteMetricSpace
// ============================================================

double FiniteMetricSpace::diameter() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      best = std::max(best, dist(i, j));
    }
  }
  return best;
}

std::vector<std::vector<double>> FiniteMetricSpace::matrix() const {
  std::vector<std::vector<double>> m(n_, std::vector<double>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      m[i][j] = dist(i, j);
    }
  }
  return m;
}

std::vector<MetricViolation> check_metric(
    const std::vector<std::vector<double>>& matrix) {
  std::vector<MetricViolation> out;
  const int n = static_cast<int>(matrix.size());
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n) {
      out.push_back({MetricViolation::Kind::NonSquare, -1, -1, -1, 0.0});
      return out;  // shape is broken, entry checks would be meaningless
    }
  }
  for (int i = 0; i < n; ++i) {
    if (matrix[i][i] != 0.0) {
      out.push_back({MetricViolation::Kind::NonzeroDiagonal, i, i, -1, 0.0});
    }
    for (int j = 0; j < n; ++j) {
      if (matrix[i][j] < 0.0) {
        out.push_back({MetricViolation::Kind::Negative, i, j, -1, 0.0});
      }
      if (j > i) {
        if (matrix[i][j] != matrix[j][i]) {
          out.push_back({MetricViolation::Kind::Asymmetric, i, j, -1, 0.0});
        }
        if (matrix[i][j] == 0.0) {
          out.push_back(
              {MetricViolation::Kind::ZeroOffDiagonal, i, j, -1, 0.0});
        }
      }
    }
  }
  if (!out.empty()) {
    return out;  // triangle checks on top of broken entries add noise
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double slack = matrix[i][k] - matrix[i][j] - matrix[j][k];
        if (slack > kTol) {
          out.push_back({MetricViolation::Kind::Triangle, i, j, k, slack});
        }
      }
    }
  }
  return out;
}

FiniteMetricSpace validate_metric(
    const std::vector<std::vector<double>>& matrix,
    std::vector<std::string> labels) {
  auto violations = check_metric(matrix);
  if (!violations.empty()) {
    throw MetricError(std::move(violations));
  }
  const int n = static_cast<int>(matrix.size());
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw Error("label count does not match point count");
  }
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : matrix) {
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteMetricSpace(n, std::move(flat), std::move(labels));
}

FiniteMetricSpace induced_subspace(const FiniteMetricSpace& space,
                                   const std::vector<int>& points) {
  auto idx = canonical_index_set(points, space.size(), "subspace points");
  if (idx.empty()) {
    throw Error("subspace needs at least one point");
  }
  const int k = static_cast<int>(idx.size());
  std::vector<std::vector<double>> m(k, std::vector<double>(k));
  std::vector<std::string> labels;
  const bool labeled = !space.labels().empty();
  for (int a = 0; a < k; ++a) {
    if (labeled) labels.push_back(space.labels()[idx[a]]);
    for (int b = 0; b < k; ++b) {
      m[a][b] = space.dist(idx[a], idx[b]);
    }
  }
  return validate_metric(m, std::move(labels));
}

std::vector<int> canonical_index_set(const std::vector<int>& indices, int size,
                                     const char* what) {
  std::vector<int> out = indices;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int v : out) {
    if (v < 0 || v >= size) {
      std::ostringstream os;
      os << what << ": index " << v << " out of range [0," << size << ")";
      throw Error(os.str());
    }
  }
  return out;
}

// ============================================================
// TargetSpace
// ============================================================

TargetSpace TargetSpace::euclidean(int dim) {
  if (dim < 1) throw Error("euclidean target needs dim >= 1");
  return TargetSpace(Kind::Euclidean, dim, nullptr);
}

TargetSpace TargetSpace::real_line() {
  return TargetSpace(Kind::RealLine, 1, nullptr);
}

TargetSpace TargetSpace::finite(FiniteMetricSpace space) {
  return TargetSpace::finite(share(std::move(space)));
}

TargetSpace TargetSpace::finite(
    std::shared_ptr<const FiniteMetricSpace> space) {
  if (!space || space->size() == 0) {
    throw Error("finite target needs at least one point");
  }
  return TargetSpace(Kind::Finite, 0, std::move(space));
}

const FiniteMetricSpace& TargetSpace::finite_space() const {
  if (kind_ != Kind::Finite) throw Error("target is not finite");
  return *finite_;
}

bool TargetSpace::operator==(const TargetSpace& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Euclidean:
      return dim_ == other.dim_;
    case Kind::RealLine:
      return true;
    case Kind::Finite:
      return finite_->same_distances(*other.finite_);
  }
  return false;
}

// ============================================================
// PartialMap
// ============================================================

PartialMap::PartialMap(std::shared_ptr<const FiniteMetricSpace> source,
                       TargetSpace target, std::vector<int> domain,
                       std::vector<std::vector<double>> values)
    : source_(std::move(source)),
      target_(std::move(target)),
      domain_(std::move(domain)),
      vec_values_(std::move(values)) {
  if (!target_.vector_valued()) {
    throw Error("coordinate values supplied for a finite target");
  }
  validate();
}

PartialMap::PartialMap(std::shared_ptr<const FiniteMetricSpace> source,
                       TargetSpace target, std::vector<int> domain,
                       std::vector<int> values)
    : source_(std::move(source)),
      target_(std::move(target)),
      domain_(std::move(domain)),
      idx_values_(std::move(values)) {
  if (target_.vector_valued()) {
    throw Error("target point indices supplied for a vector-valued target");
  }
  validate();
}

void PartialMap::validate() const {
  if (!source_) throw Error("map needs a source space");
  const int n = source_->size();
  for (std::size_t p = 0; p < domain_.size(); ++p) {
    const int v = domain_[p];
    if (v < 0 || v >= n) throw Error("domain index out of range");
    if (p > 0 && domain_[p - 1] >= v) {
      throw Error("domain must be sorted ascending with distinct indices");
    }
  }
  if (target_.vector_valued()) {
    if (vec_values_.size() != domain_.size()) {
      throw Error("value count does not match domain size");
    }
    for (const auto& v : vec_values_) {
      if (static_cast<int>(v.size()) != target_.dim()) {
        throw Error("value dimension does not match target dimension");
      }
    }
  } else {
    if (idx_values_.size() != domain_.size()) {
      throw Error("value count does not match domain size");
    }
    const int t = target_.finite_space().size();
    for (int v : idx_values_) {
      if (v < 0 || v >= t) throw Error("target point index out of range");
    }
  }
}

double PartialMap::value_distance(int pos_a, int pos_b) const {
  if (target_.vector_valued()) {
    return lp_distance(vec_values_[pos_a], vec_values_[pos_b], 2.0);
  }
  return target_.finite_space().dist(idx_values_[pos_a], idx_values_[pos_b]);
}

bool PartialMap::same_value(int pos_a, const PartialMap& other,
                            int pos_b) const {
  if (target_.vector_valued() != other.target_.vector_valued()) return false;
  if (target_.vector_valued()) {
    return vec_values_[pos_a] == other.vec_values_[pos_b];
  }
  return idx_values_[pos_a] == other.idx_values_[pos_b];
}

std::optional<int> PartialMap::position_of(int point) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), point);
  if (it == domain_.end() || *it != point) return std::nullopt;
  return static_cast<int>(it - domain_.begin());
}

PartialMap PartialMap::restricted(const std::vector<int>& sub_domain) const {
  auto sub = canonical_index_set(sub_domain, source_->size(), "sub-domain");
  std::vector<int> positions;
  positions.reserve(sub.size());
  for (int point : sub) {
    auto pos = position_of(point);
    if (!pos) throw Error("sub-domain is not contained in the domain");
    positions.push_back(*pos);
  }
  if (target_.vector_valued()) {
    std::vector<std::vector<double>> values;
    values.reserve(positions.size());
    for (int p : positions) values.push_back(vec_values_[p]);
    return PartialMap(source_, target_, std::move(sub), std::move(values));
  }
  std::vector<int> values;
  values.reserve(positions.size());
  for (int p : positions) values.push_back(idx_values_[p]);
  return PartialMap(source_, target_, std::move(sub), std::move(values));
}

bool PartialMap::is_constant() const {
  if (domain_.size() <= 1) return true;
  for (std::size_t p = 1; p < domain_.size(); ++p) {
    if (!same_value(0, *this, static_cast<int>(p))) return false;
  }
  return true;
}

// ============================================================
// Operations
// ============================================================

LipschitzReport lipschitz_constant(const PartialMap& map) {
  LipschitzReport report;
  const auto& domain = map.domain();
  const auto& space = map.source();
  const int k = static_cast<int>(domain.size());
  // Pairs run in lexicographic order, so a strict improvement rule keeps the
  // lexicographically smallest attaining witness.
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const double ratio =
          map.value_distance(a, b) / space.dist(domain[a], domain[b]);
      if (!report.witness || ratio > report.constant) {
        report.constant = ratio;
        report.witness = {domain[a], domain[b]};
      }
    }
  }
  return report;
}

SubsetDistance distance_to_subset(const FiniteMetricSpace& space,
                                  const std::vector<int>& subset, int x) {
  auto s = canonical_index_set(subset, space.size(), "subset");
  if (s.empty()) throw Error("empty subset");
  if (x < 0 || x >= space.size()) throw Error("point index out of range");
  if (std::binary_search(s.begin(), s.end(), x)) {
    throw Error("point " + std::to_string(x) + " is in the subset");
  }
  SubsetDistance best;
  best.distance = std::numeric_limits<double>::infinity();
  for (int cand : s) {  // ascending, so ties keep the smallest index
    const double d = space.dist(x, cand);
    if (d < best.distance) {
      best.distance = d;
      best.nearest = cand;
    }
  }
  return best;
}

double lp_distance(const std::vector<double>& a, const std::vector<double>& b,
                   double p) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
    return std::sqrt(s);
  }
  if (p == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += std::abs(a[i] - b[i]);
    }
    return s;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += std::pow(std::abs(a[i] - b[i]), p);
  }
  return std::pow(s, 1.0 / p);
}

FiniteMetricSpace points_to_metric(
    const std::vector<std::vector<double>>& points, double p) {
  if (!(p >= 1.0)) {  // also rejects NaN
    throw Error("bad exponent: p must be >= 1 or infinity");
  }
  const int n = static_cast<int>(points.size());
  if (n < 1) throw Error("need at least one point");
  const std::size_t dim = points[0].size();
  for (const auto& pt : points) {
    if (pt.size() != dim) throw Error("dimension mismatch between points");
  }
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = lp_distance(points[i], points[j], p);
      if (d == 0.0) {
        throw Error("duplicate point: " + std::to_string(i) + " and " +
                    std::to_string(j));
      }
      m[i][j] = d;
      m[j][i] = d;
    }
  }
  return validate_metric(m);
}

FiniteMetricSpace graph_metric(const std::vector<WeightedEdge>& edges, int n) {
  if (n < 1) throw Error("need at least one vertex");
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error("edge endpoint out of range");
    }
    if (!(e.weight > 0.0)) {
      throw Error("nonpositive weight on edge (" + std::to_string(e.u) + "," +
                  std::to_string(e.v) + ")");
    }
    if (e.u == e.v) continue;
    d[e.u][e.v] = std::min(d[e.u][e.v], e.weight);
    d[e.v][e.u] = d[e.u][e.v];
  }
  // Floyd-Warshall
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == inf) continue;
      for (int j = 0; j < n; ++j) {
        const double via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (d[i][j] == inf) {
        throw Error("graph is disconnected: no path between " +
                    std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  return validate_metric(d);
}

}  // namespace lipext
