#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lipext/errors.hpp"

namespace lipext {

// Additive tolerance used for metric axioms and for every bound
// certification. Distances produced by the generators are O(1)-O(10^2), so
// an absolute tolerance is stable.
inline constexpr double kTol = 1e-9;

// ============================================================
// Finite metric spaces
// ============================================================

// A validated distance matrix with optional point labels. Immutable after
// construction; the only way to build one is through validate_metric() or
// one of the generators, so an instance always satisfies the axioms.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  int size() const { return n_; }
  double dist(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::string>& labels() const { return labels_; }

  double diameter() const;
  std::vector<std::vector<double>> matrix() const;

  bool same_distances(const FiniteMetricSpace& other) const {
    return n_ == other.n_ && d_ == other.d_;
  }

 private:
  friend FiniteMetricSpace validate_metric(
      const std::vector<std::vector<double>>& matrix,
      std::vector<std::string> labels);

  FiniteMetricSpace(int n, std::vector<double> d,
                    std::vector<std::string> labels)
      : n_(n), d_(std::move(d)), labels_(std::move(labels)) {}

  int n_ = 0;
  std::vector<double> d_;  // row-major n x n
  std::vector<std::string> labels_;
};

// Lists every violated axiom of the would-be metric; empty means valid.
std::vector<MetricViolation> check_metric(
    const std::vector<std::vector<double>>& matrix);

// Builds a FiniteMetricSpace or throws MetricError with the full violation
// list. Pseudometrics (zero off-diagonal entries) are rejected.
FiniteMetricSpace validate_metric(
    const std::vector<std::vector<double>>& matrix,
    std::vector<std::string> labels = {});

// The metric induced on a subset of points, in the order given.
FiniteMetricSpace induced_subspace(const FiniteMetricSpace& space,
                                   const std::vector<int>& points);

inline std::shared_ptr<const FiniteMetricSpace> share(FiniteMetricSpace space) {
  return std::make_shared<const FiniteMetricSpace>(std::move(space));
}

// ============================================================
// Target spaces
// ============================================================

// Where maps take their values: Euclidean of some dimension, the real line
// (semantically Euclidean(1), but it unlocks the exact McShane solver), or
// another finite metric space.
class TargetSpace {
 public:
  enum class Kind { Euclidean, RealLine, Finite };

  static TargetSpace euclidean(int dim);
  static TargetSpace real_line();
  static TargetSpace finite(FiniteMetricSpace space);
  static TargetSpace finite(std::shared_ptr<const FiniteMetricSpace> space);

  Kind kind() const { return kind_; }
  bool vector_valued() const { return kind_ != Kind::Finite; }

  // Coordinate width for vector-valued targets (RealLine counts as 1).
  int dim() const { return dim_; }

  const FiniteMetricSpace& finite_space() const;
  std::shared_ptr<const FiniteMetricSpace> finite_space_ptr() const { return finite_; }

  bool operator==(const TargetSpace& other) const;

 private:
  TargetSpace(Kind kind, int dim,
              std::shared_ptr<const FiniteMetricSpace> finite)
      : kind_(kind), dim_(dim), finite_(std::move(finite)) {}

  Kind kind_ = Kind::RealLine;
  int dim_ = 1;
  std::shared_ptr<const FiniteMetricSpace> finite_;
};

// ============================================================
// Partial maps and Lipschitz constants
// ============================================================

// A map defined on a subset of a finite metric space, taking values in a
// target space. Vector-valued targets store one coordinate vector per domain
// point; finite targets store a target point index per domain point.
class PartialMap {
 public:
  // Vector-valued (Euclidean / RealLine) map.
  PartialMap(std::shared_ptr<const FiniteMetricSpace> source,
             TargetSpace target, std::vector<int> domain,
             std::vector<std::vector<double>> values);
  // Finite-target map.
  PartialMap(std::shared_ptr<const FiniteMetricSpace> source,
             TargetSpace target, std::vector<int> domain,
             std::vector<int> values);

  // Convenience overloads that copy the source space.
  PartialMap(const FiniteMetricSpace& source, TargetSpace target,
             std::vector<int> domain, std::vector<std::vector<double>> values)
      : PartialMap(share(source), std::move(target), std::move(domain),
                   std::move(values)) {}
  PartialMap(const FiniteMetricSpace& source, TargetSpace target,
             std::vector<int> domain, std::vector<int> values)
      : PartialMap(share(source), std::move(target), std::move(domain),
                   std::move(values)) {}

  const FiniteMetricSpace& source() const { return *source_; }
  std::shared_ptr<const FiniteMetricSpace> source_ptr() const { return source_; }
  const TargetSpace& target() const { return target_; }

  // Sorted ascending, distinct.
  const std::vector<int>& domain() const { return domain_; }
  int domain_size() const { return static_cast<int>(domain_.size()); }

  bool vector_valued() const { return target_.vector_valued(); }
  const std::vector<std::vector<double>>& vector_values() const { return vec_values_; }
  const std::vector<int>& point_values() const { return idx_values_; }
  const std::vector<double>& vector_value(int pos) const { return vec_values_[pos]; }
  int point_value(int pos) const { return idx_values_[pos]; }

  // Target distance between the images of the domain points at the two
  // positions.
  double value_distance(int pos_a, int pos_b) const;

  // Exact equality of the stored images at the two positions.
  bool same_value(int pos_a, const PartialMap& other, int pos_b) const;

  // Position of a source point in the domain, if present.
  std::optional<int> position_of(int point) const;

  // The same map restricted to a sub-domain (must be contained in domain()).
  PartialMap restricted(const std::vector<int>& sub_domain) const;

  // True when the domain has at most one point or all images coincide.
  bool is_constant() const;

 private:
  void validate() const;

  std::shared_ptr<const FiniteMetricSpace> source_;
  TargetSpace target_;
  std::vector<int> domain_;
  std::vector<std::vector<double>> vec_values_;
  std::vector<int> idx_values_;
};

struct LipschitzReport {
  double constant = 0.0;
  // Lexicographically smallest pair (i, j), i < j, attaining the maximum
  // ratio; absent when the domain has fewer than two points.
  std::optional<std::pair<int, int>> witness;
};

// Exact maximum of d_N(phi(i), phi(j)) / d_M(i, j) over domain pairs.
LipschitzReport lipschitz_constant(const PartialMap& map);

struct SubsetDistance {
  double distance = 0.0;
  int nearest = -1;  // smallest attaining index
};

// min over s in subset of d(x, s); requires x outside the subset.
SubsetDistance distance_to_subset(const FiniteMetricSpace& space,
                                  const std::vector<int>& subset, int x);

// ============================================================
// Instance construction
// ============================================================

// l_p distance between two coordinate vectors; p may be infinity.
double lp_distance(const std::vector<double>& a, const std::vector<double>& b,
                   double p);

// Pairwise l_p distances of a point cloud. Duplicate points are rejected.
FiniteMetricSpace points_to_metric(
    const std::vector<std::vector<double>>& points, double p);

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

// All-pairs shortest-path metric of a connected weighted graph.
FiniteMetricSpace graph_metric(const std::vector<WeightedEdge>& edges, int n);

// Sorted, deduplicated, range-checked copy of an index set.
std::vector<int> canonical_index_set(const std::vector<int>& indices,
                                     int size, const char* what);

}  // namespace lipext
