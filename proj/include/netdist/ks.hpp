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

#pragma once

#include <Eigen/Core>
#include <span>

#include "netdist/distance_value.hpp"
#include "netdist/network.hpp"

namespace netdist {

// Kolmogorov-Smirnov network distance: the supremum over the filtration grid
// of |f(A_eps) - f(B_eps)| for a monotone graph feature f (beta0, beta1, or
// the largest component size gamma). Integer-valued for all three features.
// argmax_threshold reports the smallest grid value attaining the supremum.
//
// The low-level overload filters any symmetric matrix directly (edges where
// value > eps), which is how correlation matrices are compared without
// turning them into metric weights first.
DistanceValue ks_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                          KsFeature feature, std::span<const double> grid);

// Defaults to the merged filtration grid of the two networks, on which the
// discrete statistic equals the exact supremum over all thresholds.
DistanceValue ks_distance(const WeightedNetwork& a, const WeightedNetwork& b,
                          KsFeature feature);
DistanceValue ks_distance(const WeightedNetwork& a, const WeightedNetwork& b,
                          KsFeature feature, std::span<const double> grid);

}  // namespace netdist
