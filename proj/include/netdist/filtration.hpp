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
#include <vector>

#include "netdist/network.hpp"

namespace netdist {

// Thresholds 0 = e_0 < w_(1) < ... < w_(q), the q unique positive edge
// weights in increasing order. This is the finest filtration the network
// admits: between consecutive thresholds the binary graph does not change.
struct Filtration {
  std::vector<double> thresholds;

  std::size_t levels() const { return thresholds.size(); }
};

// Throws EmptyGraph when the network has no positive edge weight. Tied
// weights collapse to a single threshold, so levels() can be smaller than
// edge_count + 1.
Filtration maximal_filtration(const WeightedNetwork& w);

// Adjacency of the binary graph at threshold epsilon: entry 1 iff
// w_ij > epsilon and i != j.
Eigen::MatrixXi binary_network(const WeightedNetwork& w, double epsilon);

// Step functions sampled on `grid` (evaluation is right-continuous: the
// value at epsilon describes the graph whose edges satisfy w > epsilon).
// beta0 is non-decreasing and beta1 non-increasing in epsilon, and at every
// grid point beta1 = beta0 - p + q(epsilon) with q(epsilon) the number of
// surviving edges.
struct BettiCurve {
  std::vector<double> grid;
  std::vector<int> beta0;
  std::vector<int> beta1;
};

// Low-level form: any symmetric matrix of edge values; the pair (i, j) is an
// edge at threshold g iff values(i, j) > g. The diagonal is ignored. `grid`
// must be sorted ascending.
BettiCurve betti_curve(const Eigen::MatrixXd& values, std::span<const double> grid);

// Defaults to the maximal filtration thresholds.
BettiCurve betti_curve(const WeightedNetwork& w);
BettiCurve betti_curve(const WeightedNetwork& w, std::span<const double> grid);

// Size of the largest connected component at each grid point (the gamma
// feature); same thresholding convention as betti_curve.
std::vector<int> largest_component_curve(const Eigen::MatrixXd& values,
                                         std::span<const double> grid);

// `points` equally spaced values spanning [lo, hi] inclusive.
std::vector<double> uniform_grid(double lo, double hi, int points);

// {0} followed by the sorted unique positive off-diagonal values of both
// matrices. On this grid the discrete KS supremum equals the exact one: the
// grid hits every interval on which either binary graph is constant.
std::vector<double> merged_filtration_grid(const Eigen::MatrixXd& a,
                                           const Eigen::MatrixXd& b);

}  // namespace netdist
