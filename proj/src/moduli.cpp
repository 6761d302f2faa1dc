#include "lipext/moduli.hpp"

#include <algorithm>
#include <cmath>

#include "lipext/rng.hpp"

namespace lipext {

SubsetEnumerator::SubsetEnumerator(int n, int k) : n_(n) {
  if (k < 0 || k > n) {
    done_ = true;
    return;
  }
  current_.resize(k);
  for (int i = 0; i < k; ++i) current_[i] = i;
}

void SubsetEnumerator::advance() {
  const int k = static_cast<int>(current_.size());
  if (k == 0) {
    done_ = true;
    return;
  }
  int i = 0;
  while (i < k) {
    const int limit = (i + 1 < k) ? current_[i + 1] : n_;
    if (current_[i] + 1 < limit) break;
    ++i;
  }
  if (i == k) {
    done_ = true;
    return;
  }
  ++current_[i];
  for (int j = 0; j < i; ++j) current_[j] = j;
}

namespace {

void check_enumeration_cap(int base, int exponent, std::uint64_t cap) {
  const double total =
      std::pow(static_cast<double>(base), static_cast<double>(exponent));
  if (total > static_cast<double>(cap)) {
    throw EnumerationCapExceeded(total, cap);
  }
}

bool constant_assignment(const std::vector<int>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] != values[0]) return false;
  }
  return true;
}

}  // namespace

ModulusResult modulus_for_subset(const FiniteMetricSpace& space,
                                 const std::vector<int>& subset,
                                 const TargetSpace& target,
                                 std::uint64_t cap) {
  if (target.kind() != TargetSpace::Kind::Finite) {
    throw Error("modulus_for_subset needs a finite target");
  }
  const auto sub = canonical_index_set(subset, space.size(), "subset");
  const int s = static_cast<int>(sub.size());
  const int m = space.size();
  const int t = target.finite_space().size();
  check_enumeration_cap(t, s, cap);
  check_enumeration_cap(t, m - s, cap);

  ModulusResult result;
  result.scanned.subsets = 1;
  result.witness_subset = sub;
  if (s <= 1 || t <= 1) {
    return result;  // every map is constant; ratio 1 by convention
  }

  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  const auto source = share(space);

  double best_ratio = 0.0;
  std::vector<int> assignment(s, 0);
  for (;;) {
    ++result.scanned.maps;
    if (!constant_assignment(assignment)) {
      PartialMap phi(source, target, sub, assignment);
      const double lip = lipschitz_constant(phi).constant;
      const ExtensionResult ext = brute_force_extend(phi, all, cap);
      result.scanned.extensions +=
          static_cast<std::uint64_t>(ext.iterations);
      const double ratio = ext.constant / lip;
      if (ratio > best_ratio) {
        best_ratio = ratio;
        result.witness_phi = std::move(phi);
      }
    }
    int slot = s - 1;
    while (slot >= 0 && assignment[slot] == t - 1) {
      assignment[slot] = 0;
      --slot;
    }
    if (slot < 0) break;
    ++assignment[slot];
  }
  result.value = std::max(1.0, best_ratio);
  return result;
}

ModulusResult modulus_for_subset_euclidean(
    const FiniteMetricSpace& space, const std::vector<int>& subset,
    const EuclideanModulusOptions& options) {
  if (options.dim < 1) throw Error("need dim >= 1");
  if (options.trials < 1) throw Error("need trials >= 1");
  const auto sub = canonical_index_set(subset, space.size(), "subset");
  const int s = static_cast<int>(sub.size());
  const int m = space.size();
  const auto target = TargetSpace::euclidean(options.dim);
  const auto source = share(space);

  ModulusResult result;
  result.exact = false;
  result.scanned.subsets = 1;
  result.witness_subset = sub;
  if (s <= 1) return result;

  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;

  std::vector<PartialMap> candidates;
  for (const auto& cand : options.candidates) {
    if (cand.domain() != sub || !(cand.target() == target)) {
      throw Error("candidate map must live on (space, subset) with the "
                  "requested Euclidean target");
    }
    candidates.push_back(cand);
  }

  {
    // Distance-coordinate map: coordinate i is the distance to an anchor in
    // the subset, each 1-Lipschitz by the triangle inequality.
    std::vector<std::vector<double>> values(s,
                                            std::vector<double>(options.dim));
    for (int p = 0; p < s; ++p) {
      for (int c = 0; c < options.dim; ++c) {
        values[p][c] = space.dist(sub[p], sub[c % s]);
      }
    }
    candidates.emplace_back(source, target, sub, std::move(values));
  }

  const double spread = std::max(space.diameter(), 1.0);
  for (int trial = 0; trial < options.trials; ++trial) {
    Rng rng(mix_seed(options.seed, static_cast<std::uint64_t>(trial)));
    std::vector<std::vector<double>> values(s,
                                            std::vector<double>(options.dim));
    for (auto& row : values) {
      for (double& c : row) c = spread * rng.gaussian();
    }
    candidates.emplace_back(source, target, sub, std::move(values));
  }

  EuclideanExtendOptions eopts;
  eopts.budget = options.budget;
  eopts.tol = options.tol;

  double best_lb = 0.0;
  for (const auto& phi : candidates) {
    ++result.scanned.maps;
    if (phi.is_constant()) continue;
    const double lip = lipschitz_constant(phi).constant;
    const ExtensionResult ext = euclidean_extend(phi, all, eopts);
    result.scanned.extensions += static_cast<std::uint64_t>(ext.iterations);
    const double lb = (ext.constant - ext.gap) / lip;
    if (lb > best_lb) {
      best_lb = lb;
      result.witness_phi = phi;
    }
  }
  result.value = std::max(1.0, best_lb);
  return result;
}

namespace {

void absorb(ModulusResult& total, ModulusResult&& part,
            const std::vector<int>& subset, const std::vector<int>& xs,
            bool& any) {
  total.scanned.subsets += part.scanned.subsets;
  total.scanned.maps += part.scanned.maps;
  total.scanned.extensions += part.scanned.extensions;
  if (!any || part.value > total.value) {
    total.value = part.value;
    total.witness_phi = std::move(part.witness_phi);
    total.witness_subset = subset;
    total.witness_xs = xs;
    any = true;
  }
}

}  // namespace

ModulusResult e_n(const FiniteMetricSpace& space, int n,
                  const TargetSpace& target, std::uint64_t cap) {
  if (n < 1) throw Error("need n >= 1");
  ModulusResult result;
  bool any = false;
  const int m = space.size();
  for (int k = 1; k <= std::min(n, m); ++k) {
    for (SubsetEnumerator sets(m, k); !sets.done(); sets.advance()) {
      absorb(result, modulus_for_subset(space, sets.current(), target, cap),
             sets.current(), {}, any);
    }
  }
  return result;
}

ModulusResult e_up_n(const FiniteMetricSpace& space, int n,
                     const TargetSpace& target, std::uint64_t cap) {
  if (n < 1) throw Error("need n >= 1");
  ModulusResult result;
  bool any = false;
  const int m = space.size();
  const auto source = share(space);
  // k added points realize every multiset of up to n additions; the paper's
  // n possibly-repeating points collapse to k <= n distinct ones.
  for (int k = 1; k <= std::min(n, m - 1); ++k) {
    for (int s_size = 1; s_size + k <= m; ++s_size) {
      for (SubsetEnumerator sets(m, s_size); !sets.done(); sets.advance()) {
        const auto& sub = sets.current();
        std::vector<int> complement;
        complement.reserve(m - s_size);
        for (int i = 0; i < m; ++i) {
          if (!std::binary_search(sub.begin(), sub.end(), i)) {
            complement.push_back(i);
          }
        }
        for (SubsetEnumerator xsel(static_cast<int>(complement.size()), k);
             !xsel.done(); xsel.advance()) {
          std::vector<int> xs;
          xs.reserve(k);
          for (int idx : xsel.current()) xs.push_back(complement[idx]);

          std::vector<int> inner_points = sub;
          inner_points.insert(inner_points.end(), xs.begin(), xs.end());
          std::sort(inner_points.begin(), inner_points.end());
          const auto inner_space = induced_subspace(space, inner_points);

          std::vector<int> local_sub;
          local_sub.reserve(s_size);
          for (int i = 0; i < static_cast<int>(inner_points.size()); ++i) {
            if (std::binary_search(sub.begin(), sub.end(), inner_points[i])) {
              local_sub.push_back(i);
            }
          }

          auto inner = modulus_for_subset(inner_space, local_sub, target, cap);
          // Re-home the witness onto the original space.
          if (inner.witness_phi) {
            const auto& local = *inner.witness_phi;
            if (local.vector_valued()) {
              inner.witness_phi = PartialMap(source, local.target(), sub,
                                             local.vector_values());
            } else {
              inner.witness_phi = PartialMap(source, local.target(), sub,
                                             local.point_values());
            }
          }
          absorb(result, std::move(inner), sub, xs, any);
        }
      }
    }
  }
  return result;
}

Claim1Check check_claim1(const FiniteMetricSpace& space, int n,
                         const TargetSpace& target, std::uint64_t cap) {
  Claim1Check check;
  check.e_up_result = e_up_n(space, n, target, cap);
  check.e_n_result = e_n(space, n, target, cap);
  check.e_up_value = check.e_up_result.value;
  check.e_n_value = check.e_n_result.value;
  check.slack = check.e_n_value + 2.0 - check.e_up_value;
  if (check.slack < -kTol) {
    throw CertificationFailure("claim1", -1, -1, check.e_up_value,
                               check.e_n_value + 2.0);
  }
  return check;
}

}  // namespace lipext
