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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "netdist/data_matrix.hpp"
#include "netdist/errors.hpp"
#include "netdist/network.hpp"
#include "oracles.hpp"

using namespace netdist;

namespace {

// The three unit vectors of the published 3-node counterexample.
DataMatrix counterexample_data() {
  const double s2 = std::sqrt(2.0);
  const double s6 = std::sqrt(6.0);
  Eigen::MatrixXd x(3, 3);
  x.col(0) << 0.0, 1.0 / s2, -1.0 / s2;
  x.col(1) << 1.0 / s2, 0.0, -1.0 / s2;
  x.col(2) << 1.0 / s6, 1.0 / s6, -2.0 / s6;
  return DataMatrix{x, true};
}

DataMatrix random_data(int n, int p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd x(n, p);
  for (int j = 0; j < p; ++j) {
    for (int i = 0; i < n; ++i) x(i, j) = normal(rng);
  }
  return DataMatrix{x, false};
}

}  // namespace

TEST_CASE("standardize: fixed point, arithmetic and counterexample columns") {
  const double s2 = std::sqrt(2.0);

  // already mean 0, norm 1
  Eigen::MatrixXd fixed(3, 1);
  fixed << 1.0 / s2, 0.0, -1.0 / s2;
  const DataMatrix out_fixed = standardize(DataMatrix{fixed, false});
  CHECK(out_fixed.values.isApprox(fixed, 1e-14));
  CHECK(out_fixed.standardized);

  // (1, 2, 3): subtract mean 2, divide by norm sqrt(2)
  Eigen::MatrixXd ramp(3, 1);
  ramp << 1.0, 2.0, 3.0;
  const DataMatrix out_ramp = standardize(DataMatrix{ramp, false});
  CHECK(out_ramp.values(0, 0) == doctest::Approx(-1.0 / s2).epsilon(1e-14));
  CHECK(out_ramp.values(1, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(out_ramp.values(2, 0) == doctest::Approx(1.0 / s2).epsilon(1e-14));

  // x_k of the counterexample is already standardized
  const DataMatrix ce = counterexample_data();
  const DataMatrix restd = standardize(DataMatrix{ce.values, false});
  CHECK(restd.values.isApprox(ce.values, 1e-12));

  CHECK(is_standardized(restd.values));
}

TEST_CASE("standardize rejects constant columns and single rows") {
  Eigen::MatrixXd flat(3, 2);
  flat << 1.0, 5.0, 1.0, 6.0, 1.0, 7.0;
  CHECK_THROWS_AS(standardize(DataMatrix{flat, false}), ConstantColumn);

  Eigen::MatrixXd one_row(1, 2);
  one_row << 1.0, 2.0;
  CHECK_THROWS_AS(standardize(DataMatrix{one_row, false}), InputError);
}

TEST_CASE("correlation_network: counterexample weights and the metric failure") {
  const DataMatrix x = counterexample_data();

  const WeightedNetwork net = correlation_network(x, WeightTransform::identity_minus());
  // x_i . x_j = 1/2, x_i . x_k = x_j . x_k = sqrt(3)/2
  CHECK(net(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(net(0, 2) == doctest::Approx(1.0 - std::sqrt(3.0) / 2.0).epsilon(1e-12));
  CHECK(net(1, 2) == doctest::Approx(1.0 - std::sqrt(3.0) / 2.0).epsilon(1e-12));

  // 1 - r violates the triangle inequality on this triple ...
  const MetricReport bad = check_metric(net);
  CHECK(!bad.triangle_violations.empty());
  bool found = false;
  for (const TriangleViolation& v : bad.triangle_violations) {
    if (((v.i == 0 && v.j == 1) || (v.i == 1 && v.j == 0)) && v.k == 2) {
      found = true;
      CHECK(v.excess == doctest::Approx(std::sqrt(3.0) - 1.5).epsilon(1e-12));
    }
  }
  CHECK(found);

  // ... while the arccos weights pass (the triple meets the bound exactly)
  const WeightedNetwork angles = correlation_network(x, WeightTransform::arccos());
  CHECK(angles(0, 1) == doctest::Approx(std::acos(0.5)).epsilon(1e-14));
  CHECK(check_metric(angles).is_metric());
}

TEST_CASE("correlation_network: self-correlation and standardization flag") {
  const DataMatrix x = standardize(random_data(6, 4, 11));
  const WeightedNetwork net = correlation_network(x, WeightTransform::sqrt_one_minus());
  for (Eigen::Index j = 0; j < net.node_count(); ++j) CHECK(net(j, j) == 0.0);

  CHECK_THROWS_AS(correlation_network(DataMatrix{x.values, false},
                                      WeightTransform::sqrt_one_minus()),
                  NotStandardized);
}

TEST_CASE("correlation_network: arccos weights match the per-pair oracle") {
  const DataMatrix x = standardize(random_data(4, 3, 17));
  const WeightedNetwork net = correlation_network(x, WeightTransform::arccos());
  for (Eigen::Index j = 0; j < 3; ++j) {
    for (Eigen::Index i = j + 1; i < 3; ++i) {
      const double r = x.values.col(i).dot(x.values.col(j));
      CHECK(net(i, j) == doctest::Approx(std::acos(std::clamp(r, -1.0, 1.0))).epsilon(1e-13));
      CHECK(net(i, j) >= 0.0);
      CHECK(net(i, j) <= std::acos(-1.0));
    }
  }
}

TEST_CASE("check_metric: degenerate and random metric-family networks") {
  // all-zero weights: degenerate but metric
  const WeightedNetwork zero = WeightedNetwork::from_weights(Eigen::MatrixXd::Zero(4, 4));
  CHECK(check_metric(zero).is_metric());

  // Theorem coverage: arccos of 50 random standardized columns stays metric
  const DataMatrix x = standardize(random_data(10, 50, 23));
  const WeightedNetwork net = correlation_network(x, WeightTransform::arccos());
  const MetricReport report = check_metric(net);
  CHECK(report.is_metric());
}

TEST_CASE("metric family property: random data stays metric, weights in range") {
  std::mt19937_64 seeds(4242);
  const double pi = std::acos(-1.0);
  for (int rep = 0; rep < 8; ++rep) {
    const int n = 4 + static_cast<int>(seeds() % 17);  // up to 20 observations
    const int p = 3 + static_cast<int>(seeds() % 8);   // up to 10 nodes
    const DataMatrix x = standardize(random_data(n, p, seeds()));
    for (const WeightTransform t :
         {WeightTransform::sqrt_one_minus(), WeightTransform::arccos(),
          WeightTransform::power_arccos(3), WeightTransform::power_sqrt(2)}) {
      const WeightedNetwork net = correlation_network(x, t);
      CHECK(check_metric(net).is_metric());
    }
    const WeightedNetwork angles = correlation_network(x, WeightTransform::arccos());
    CHECK(angles.weights().maxCoeff() <= pi + 1e-12);
    const WeightedNetwork roots = correlation_network(x, WeightTransform::sqrt_one_minus());
    CHECK(roots.weights().maxCoeff() <= std::sqrt(2.0) + 1e-12);
  }
}

TEST_CASE("metric_preserving: identity, square root, and a convex failure") {
  const DataMatrix x = counterexample_data();
  const WeightedNetwork angles = correlation_network(x, WeightTransform::arccos());

  const MetricPreservingResult same = metric_preserving(angles, 1);
  CHECK(same.concavity_verified);
  CHECK(same.network.weights().isApprox(angles.weights(), 1e-14));

  const MetricPreservingResult root = metric_preserving(angles, 2);
  CHECK(root.concavity_verified);
  CHECK(check_metric(root.network).is_metric());

  // x^2 is convex: not metric preserving, and flagged unverified
  const MetricPreservingResult squared =
      metric_preserving(angles, [](double v) { return v * v; });
  CHECK(!squared.concavity_verified);
  CHECK(!check_metric(squared.network).is_metric());

  CHECK_THROWS_AS(metric_preserving(angles, [](double) { return -1.0; }), NegativeWeight);
}

TEST_CASE("WeightedNetwork validation") {
  Eigen::MatrixXd bad_diag = Eigen::MatrixXd::Zero(2, 2);
  bad_diag(0, 0) = 0.5;
  CHECK_THROWS_AS(WeightedNetwork::from_weights(bad_diag), InputError);

  Eigen::MatrixXd negative = Eigen::MatrixXd::Zero(2, 2);
  negative(0, 1) = negative(1, 0) = -0.25;
  CHECK_THROWS_AS(WeightedNetwork::from_weights(negative), InputError);

  Eigen::MatrixXd skew = Eigen::MatrixXd::Zero(2, 2);
  skew(0, 1) = 0.5;
  skew(1, 0) = 0.5 + 1e-9;
  CHECK_THROWS_AS(WeightedNetwork::from_weights(skew), InputError);
}

TEST_CASE("WeightTransform parsing round-trips") {
  for (const char* name : {"identity-minus", "sqrt-one-minus", "arccos", "power-arccos-3",
                           "power-sqrt-2", "raw-correlation"}) {
    const auto t = WeightTransform::parse(name);
    REQUIRE(t.has_value());
    CHECK(t->name() == name);
  }
  CHECK(!WeightTransform::parse("power-arccos-0").has_value());
  CHECK(!WeightTransform::parse("nope").has_value());
}
