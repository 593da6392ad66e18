// Copyright 2026 The netdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netdist/ks.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "netdist/errors.hpp"
#include "netdist/filtration.hpp"

namespace netdist {

namespace {

std::vector<int> feature_curve(const Eigen::MatrixXd& values, KsFeature feature,
                               std::span<const double> grid) {
  switch (feature) {
    case KsFeature::beta0:
      return betti_curve(values, grid).beta0;
    case KsFeature::beta1:
      return betti_curve(values, grid).beta1;
    case KsFeature::gamma:
      return largest_component_curve(values, grid);
  }
  return {};
}

}  // namespace

DistanceValue ks_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                          KsFeature feature, std::span<const double> grid) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatch("ks_distance: matrices must be square and equal");
  }
  if (grid.empty()) throw InputError("ks_distance: empty filtration grid");

  const std::vector<int> fa = feature_curve(a, feature, grid);
  const std::vector<int> fb = feature_curve(b, feature, grid);
  int sup = 0;
  std::size_t argmax = 0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const int gap = std::abs(fa[g] - fb[g]);
    if (gap > sup) {
      sup = gap;
      argmax = g;  // first maximizer: ties go to the smallest threshold
    }
  }
  return DistanceValue{static_cast<double>(sup), Method::ks, feature, grid[argmax]};
}

DistanceValue ks_distance(const WeightedNetwork& a, const WeightedNetwork& b,
                          KsFeature feature, std::span<const double> grid) {
  return ks_distance(a.weights(), b.weights(), feature, grid);
}

DistanceValue ks_distance(const WeightedNetwork& a, const WeightedNetwork& b,
                          KsFeature feature) {
  const std::vector<double> grid = merged_filtration_grid(a.weights(), b.weights());
  return ks_distance(a.weights(), b.weights(), feature, grid);
}

}  // namespace netdist
