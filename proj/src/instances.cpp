#include "lipext/instances.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "lipext/rng.hpp"

namespace lipext {

FiniteMetricSpace path_space(int m) {
  if (m < 1) throw Error("path needs m >= 1 edges");
  const int n = m + 1;
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      d[i][j] = std::abs(i - j);
    }
  }
  return validate_metric(d);
}

FiniteMetricSpace cycle_space(int m) {
  if (m < 3) throw Error("cycle needs m >= 3 points");
  std::vector<std::vector<double>> d(m, std::vector<double>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int around = std::abs(i - j);
      d[i][j] = std::min(around, m - around);
    }
  }
  return validate_metric(d);
}

FiniteMetricSpace uniform_space(int k, double distance) {
  if (k < 1) throw Error("need at least one point");
  if (!(distance > 0.0)) throw Error("distance must be positive");
  std::vector<std::vector<double>> d(k, std::vector<double>(k, distance));
  for (int i = 0; i < k; ++i) d[i][i] = 0.0;
  return validate_metric(d);
}

namespace {

bool connected(int n, const std::vector<WeightedEdge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace

GeneratedGraph random_graph_space(const RandomGraphParams& params) {
  if (params.n < 1) throw Error("need at least one vertex");
  if (!(params.edge_prob >= 0.0 && params.edge_prob <= 1.0)) {
    throw Error("edge probability must lie in [0,1]");
  }
  if (!(params.w_min > 0.0) || params.w_max < params.w_min) {
    throw Error("weight range must satisfy 0 < w_min <= w_max");
  }
  Rng rng(params.seed);
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < params.n; ++u) {
      for (int v = u + 1; v < params.n; ++v) {
        if (rng.uniform() < params.edge_prob) {
          edges.push_back({u, v, rng.uniform(params.w_min, params.w_max)});
        }
      }
    }
    if (params.n == 1 || connected(params.n, edges)) {
      GeneratedGraph out{graph_metric(edges, params.n), std::move(edges),
                         attempt};
      return out;
    }
  }
  throw Error("random graph stayed disconnected after " +
              std::to_string(params.max_retries + 1) + " draws (n=" +
              std::to_string(params.n) + ", p=" +
              std::to_string(params.edge_prob) + ")");
}

GeneratedCloud lp_cloud_space(const LpCloudParams& params) {
  if (params.n < 1) throw Error("need at least one point");
  if (params.dim < 1) throw Error("need dim >= 1");
  Rng rng(params.seed);
  std::vector<std::vector<double>> points(params.n,
                                          std::vector<double>(params.dim));
  for (auto& pt : points) {
    for (double& c : pt) {
      c = rng.uniform(0.0, 10.0);
    }
  }
  return GeneratedCloud{points_to_metric(points, params.p), std::move(points)};
}

}  // namespace lipext
