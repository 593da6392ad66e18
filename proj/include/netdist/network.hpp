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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netdist/data_matrix.hpp"

namespace netdist {

// Undirected weighted network on p nodes. Weights are symmetric and
// nonnegative with zero diagonal; an off-diagonal zero means "no edge".
// The triangle inequality is not an invariant of the type, it is checked on
// demand with check_metric().
//
// The raw-correlation transform is the one sanctioned exception: it carries
// a correlation matrix (unit diagonal, possibly negative entries) so that
// filtrations can be built directly over correlations.
class WeightedNetwork {
public:
  // Validates symmetry (to 1e-12), nonnegativity and zero diagonal.
  static WeightedNetwork from_weights(Eigen::MatrixXd w);

  // No validation beyond squareness; used for correlation filtrations.
  static WeightedNetwork from_raw_values(Eigen::MatrixXd w);

  Eigen::Index node_count() const { return w_.rows(); }
  const Eigen::MatrixXd& weights() const { return w_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return w_(i, j); }

private:
  explicit WeightedNetwork(Eigen::MatrixXd w) : w_(std::move(w)) {}
  Eigen::MatrixXd w_;
};

// Element-wise maps from correlation r to edge weight.
struct WeightTransform {
  enum class Kind {
    identity_minus,   // 1 - r              (not a metric; see check_metric)
    sqrt_one_minus,   // sqrt(1 - r)
    arccos,           // acos(r), principal value in [0, pi]
    power_arccos,     // acos(r)^(1/m)
    power_sqrt,       // (1 - r)^(1/(2m))
    raw_correlation,  // r itself, for filtrations over correlations
  };

  Kind kind = Kind::sqrt_one_minus;
  int m = 1;  // power transforms only, m >= 1

  static WeightTransform identity_minus() { return {Kind::identity_minus, 1}; }
  static WeightTransform sqrt_one_minus() { return {Kind::sqrt_one_minus, 1}; }
  static WeightTransform arccos() { return {Kind::arccos, 1}; }
  static WeightTransform power_arccos(int m) { return {Kind::power_arccos, m}; }
  static WeightTransform power_sqrt(int m) { return {Kind::power_sqrt, m}; }
  static WeightTransform raw_correlation() { return {Kind::raw_correlation, 1}; }

  double apply(double r) const;

  // True for the transforms known to produce a metric on standardized data
  // (sqrt-one-minus, arccos and their metric-preserving powers).
  bool metric_family() const;

  static std::optional<WeightTransform> parse(std::string_view name);
  std::string name() const;
};

// Builds the correlation network of a standardized DataMatrix. Throws
// NotStandardized when the flag is unset, NumericalDomain when a correlation
// is more than 1e-12 outside [-1, 1] (values within tolerance are clamped).
// Diagonal is 0 for every transform except raw-correlation (diagonal 1).
WeightedNetwork correlation_network(const DataMatrix& x, WeightTransform transform);

struct TriangleViolation {
  Eigen::Index i, j, k;
  double excess;  // w_ij - w_ik - w_kj > 0
};

struct MetricReport {
  bool nonnegativity_ok = true;
  bool identity_ok = true;
  bool symmetry_ok = true;
  std::vector<TriangleViolation> triangle_violations;

  bool is_metric() const {
    return nonnegativity_ok && identity_ok && symmetry_ok && triangle_violations.empty();
  }
};

// Exhaustively checks all ordered triples (i, j, k) of distinct nodes and
// reports every violation with its excess. `tolerance` absorbs round-off on
// exact boundary cases (e.g. arccos triples that meet the bound exactly).
MetricReport check_metric(const WeightedNetwork& w, double tolerance = 1e-12);

struct MetricPreservingResult {
  WeightedNetwork network;
  // True when f came from the named metric-preserving family; arbitrary
  // functions are applied as-is and flagged unverified.
  bool concavity_verified = false;
};

// f(x) = x^(1/m) for integer m >= 1 (m = 2 is the square root).
MetricPreservingResult metric_preserving(const WeightedNetwork& w, int root_m);

// Arbitrary element-wise f; throws NegativeWeight if f produces a negative
// value. The result is flagged unverified.
MetricPreservingResult metric_preserving(const WeightedNetwork& w,
                                         const std::function<double(double)>& f);

}  // namespace netdist
