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

#include "netdist/norms.hpp"

#include <Eigen/Eigenvalues>
#include <string>

namespace netdist {

double norm_distance(const WeightedNetwork& a, const WeightedNetwork& b, double order) {
  if (a.node_count() != b.node_count()) {
    throw DimensionMismatch("norm_distance: node counts differ");
  }
  if (!(order > 0.0)) throw InputError("norm_distance: order must be positive");
  return matrix_norm_distance(a.weights(), b.weights(), order);
}

namespace {

Eigen::MatrixXd symmetric_log(const Eigen::MatrixXd& r, double alpha, int which) {
  Eigen::MatrixXd reg = r;
  reg.diagonal().array() += alpha;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(reg);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double min_ev = ev.minCoeff();
  if (min_ev <= 1e-10) {
    throw NotPositiveDefinite(which, min_ev,
                              "log_euclidean_distance: argument " + std::to_string(which) +
                                  " is not positive definite after regularization "
                                  "(min eigenvalue " +
                                  std::to_string(min_ev) + ")");
  }
  return es.eigenvectors() * ev.array().log().matrix().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

double log_euclidean_distance(const Eigen::MatrixXd& r1, const Eigen::MatrixXd& r2,
                              double alpha) {
  if (r1.rows() != r1.cols() || r2.rows() != r2.cols() || r1.rows() != r2.rows()) {
    throw DimensionMismatch("log_euclidean_distance: matrices must be square and equal");
  }
  if (alpha < 0.0) throw InputError("log_euclidean_distance: alpha must be >= 0");
  const Eigen::MatrixXd l1 = symmetric_log(r1, alpha, 1);
  const Eigen::MatrixXd l2 = symmetric_log(r2, alpha, 2);
  return (l1 - l2).norm();
}

}  // namespace netdist
