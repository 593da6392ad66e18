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
#include <cmath>
#include <limits>

#include "netdist/errors.hpp"
#include "netdist/network.hpp"

namespace netdist {

inline constexpr double kInfOrder = std::numeric_limits<double>::infinity();

// Entry-wise l-norm of the difference, (sum_{i,j} |a_ij - b_ij|^l)^(1/l).
// The sum runs over every ordered pair (i, j), both triangles included, so
// for l = 1 the result is twice the upper-triangle sum (and sqrt(2) times it
// for l = 2). Pass kInfOrder for the max norm.
template <typename DerivedA, typename DerivedB>
double matrix_norm_distance(const Eigen::MatrixBase<DerivedA>& a,
                            const Eigen::MatrixBase<DerivedB>& b, double order) {
  const auto diff = (a.derived() - b.derived()).cwiseAbs();
  if (std::isinf(order)) return diff.maxCoeff();
  if (order == 1.0) return diff.sum();
  if (order == 2.0) return std::sqrt(diff.array().square().sum());
  return std::pow(diff.array().pow(order).sum(), 1.0 / order);
}

// Same, over network weight matrices. Throws DimensionMismatch.
double norm_distance(const WeightedNetwork& a, const WeightedNetwork& b, double order);

// Log-Euclidean distance between symmetric positive definite matrices,
// the Frobenius norm of log(r1 + alpha*I) - log(r2 + alpha*I). Matrix logs
// are taken through the symmetric eigendecomposition. Throws
// NotPositiveDefinite when a regularized matrix still has an eigenvalue
// <= 1e-10, and DimensionMismatch for unequal shapes.
double log_euclidean_distance(const Eigen::MatrixXd& r1, const Eigen::MatrixXd& r2,
                              double alpha = 0.0);

}  // namespace netdist
