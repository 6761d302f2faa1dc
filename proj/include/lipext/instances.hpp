#pragma once

#include <cstdint>
#include <vector>

#include "lipext/metric.hpp"

namespace lipext {

// Unit path on m+1 points 0..m.
FiniteMetricSpace path_space(int m);

// Unit cycle on m >= 3 points.
FiniteMetricSpace cycle_space(int m);

// k points, every pair at the same distance. uniform_space(2) is the
// two-point target, uniform_space(3) the equilateral three-point one.
FiniteMetricSpace uniform_space(int k, double distance = 1.0);

struct RandomGraphParams {
  int n = 6;
  double edge_prob = 0.5;
  double w_min = 1.0;
  double w_max = 3.0;
  std::uint64_t seed = 0;
  int max_retries = 64;
};

struct GeneratedGraph {
  FiniteMetricSpace space;
  std::vector<WeightedEdge> edges;
  int retries = 0;  // discarded disconnected draws before this one
};

// Erdos-Renyi draw with uniform weights, redrawn until connected. Throws
// after max_retries disconnected draws, reporting the count.
GeneratedGraph random_graph_space(const RandomGraphParams& params);

struct LpCloudParams {
  int n = 8;
  int dim = 2;
  double p = 2.0;
  std::uint64_t seed = 0;
};

struct GeneratedCloud {
  FiniteMetricSpace space;
  std::vector<std::vector<double>> points;
};

// n points uniform in [0, 10)^dim with their pairwise l_p metric.
GeneratedCloud lp_cloud_space(const LpCloudParams& params);

}  // namespace lipext
