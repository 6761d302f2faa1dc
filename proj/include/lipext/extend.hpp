#pragma once

#include <cstdint>
#include <vector>

#include "lipext/metric.hpp"

namespace lipext {

enum class Optimality {
  Exact,       // the achieved constant is the true minimum
  UpperBound,  // the achieved constant bounds the minimum from above
  Heuristic,
};

struct ExtensionResult {
  PartialMap map;  // domain is the requested superset; agrees with the input
                   // map bit-identically on its domain
  double constant = 0.0;  // exact Lipschitz constant of `map`
  Optimality optimality = Optimality::Exact;
  double gap = 0.0;  // UpperBound only: objective spread over the last
                     // plateau window of the solver
  std::int64_t iterations = 0;
  std::vector<double> trace;  // best objective per iteration, when recorded
};

// Classical McShane extension for real-valued maps:
//   ext(x) = min over s in domain of (value(s) + L * d(x, s)).
// Lossless: the achieved constant equals L.
ExtensionResult mcshane_extend(const PartialMap& map,
                               const std::vector<int>& to);

struct EuclideanExtendOptions {
  std::int64_t budget = 50000;
  double tol = 1e-9;  // relative step floor: stop once the step scale falls
                      // below tol * initial objective
  bool record_trace = false;
};

// Minimizes the worst pair ratio
//   F = max over pairs u,v in `to` of |ext(u) - ext(v)|_2 / d(u, v)
// over the images of the points in `to \ domain`, keeping the rest fixed.
// Subgradient descent with diminishing steps from a distance-weighted mean
// initialization; the result is an upper bound on the optimal constant.
ExtensionResult euclidean_extend(const PartialMap& map,
                                 const std::vector<int>& to,
                                 std::int64_t budget, double tol = 1e-9);
ExtensionResult euclidean_extend(const PartialMap& map,
                                 const std::vector<int>& to,
                                 const EuclideanExtendOptions& options);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Exhaustive minimizer over all |target|^|to \ domain| assignments for finite
// targets. Ties break to the lexicographically smallest assignment vector.
ExtensionResult brute_force_extend(
    const PartialMap& map, const std::vector<int>& to,
    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace lipext
