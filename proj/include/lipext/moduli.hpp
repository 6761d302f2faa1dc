#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lipext/extend.hpp"
#include "lipext/metric.hpp"

namespace lipext {

struct ScanCounters {
  std::uint64_t subsets = 0;     // (sub)set choices examined
  std::uint64_t maps = 0;        // candidate maps enumerated or sampled
  std::uint64_t extensions = 0;  // extension assignments / solver iterations
};

// Value of an extension modulus together with the witnesses attaining it.
// `value` is the supremum of (minimal extension constant) / (Lipschitz
// constant) over the scanned maps, floored at 1; maps with Lipschitz
// constant 0 extend by a constant and contribute ratio 1 by convention.
struct ModulusResult {
  double value = 1.0;
  bool exact = true;
  std::optional<PartialMap> witness_phi;
  std::vector<int> witness_subset;
  std::vector<int> witness_xs;  // only for the added-points modulus
  ScanCounters scanned;
};

// e(M, S; N) for a finite target: exhaustive over maps and extensions.
ModulusResult modulus_for_subset(const FiniteMetricSpace& space,
                                 const std::vector<int>& subset,
                                 const TargetSpace& target,
                                 std::uint64_t cap = kDefaultEnumerationCap);

struct EuclideanModulusOptions {
  int dim = 1;
  int trials = 32;
  std::int64_t budget = 50000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  // Extra adversarial candidates (e.g. coordinate restrictions of the cloud
  // an instance was built from). Must be maps on (space, subset) into
  // Euclidean(dim).
  std::vector<PartialMap> candidates;
};

// Lower-bound estimate of e(M, S; R^dim) by adversarial sampling: Gaussian
// images, distance-coordinate maps, and any caller-supplied candidates, with
// the subgradient solver as the inner extension. Never exact: the inner
// infimum is only bounded from above, so each sample contributes
// (constant - gap) / L.
ModulusResult modulus_for_subset_euclidean(
    const FiniteMetricSpace& space, const std::vector<int>& subset,
    const EuclideanModulusOptions& options);

// e_n(M; N): sup of e(M, S; N) over subsets of size at most n.
ModulusResult e_n(const FiniteMetricSpace& space, int n,
                  const TargetSpace& target,
                  std::uint64_t cap = kDefaultEnumerationCap);

// e^n(M; N): sup of e(S u {x_1..x_k}, S; N) over subsets S, k <= n added
// points outside S. The inner space is S u {x}, not M.
ModulusResult e_up_n(const FiniteMetricSpace& space, int n,
                     const TargetSpace& target,
                     std::uint64_t cap = kDefaultEnumerationCap);

struct Claim1Check {
  ModulusResult e_up_result;
  ModulusResult e_n_result;
  double e_up_value = 1.0;
  double e_n_value = 1.0;
  double slack = 2.0;  // e_n + 2 - e_up, nonnegative by the glued bound
};

// Computes both moduli exactly and certifies e^n <= e_n + 2.
Claim1Check check_claim1(const FiniteMetricSpace& space, int n,
                         const TargetSpace& target,
                         std::uint64_t cap = kDefaultEnumerationCap);

// Visits k-subsets of {0..n-1} in colexicographic order.
class SubsetEnumerator {
 public:
  SubsetEnumerator(int n, int k);
  bool done() const { return done_; }
  const std::vector<int>& current() const { return current_; }
  void advance();

 private:
  int n_;
  std::vector<int> current_;
  bool done_ = false;
};

}  // namespace lipext
