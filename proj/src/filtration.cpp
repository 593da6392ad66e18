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

#include "netdist/filtration.hpp"

#include <algorithm>
#include <cstddef>

#include "edges.hpp"
#include "netdist/errors.hpp"
#include "union_find.hpp"

namespace netdist {

using detail::Edge;

Filtration maximal_filtration(const WeightedNetwork& w) {
  std::vector<Edge> edges = detail::positive_edges(w.weights());
  if (edges.empty()) {
    throw EmptyGraph("maximal_filtration: network has no positive edge weight");
  }
  std::vector<double> thresholds;
  thresholds.reserve(edges.size() + 1);
  thresholds.push_back(0.0);
  for (const Edge& e : edges) thresholds.push_back(e.weight);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  return Filtration{std::move(thresholds)};
}

Eigen::MatrixXi binary_network(const WeightedNetwork& w, double epsilon) {
  const Eigen::Index p = w.node_count();
  Eigen::MatrixXi adj = Eigen::MatrixXi::Zero(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    for (Eigen::Index i = j + 1; i < p; ++i) {
      if (w(i, j) > epsilon) {
        adj(i, j) = 1;
        adj(j, i) = 1;
      }
    }
  }
  return adj;
}

namespace {

// One downward sweep: visits the grid from its largest value to its
// smallest, inserting edges as they cross the threshold, and reports
// component statistics at every grid point.
template <typename Record>
void sweep(const Eigen::MatrixXd& values, std::span<const double> grid, Record&& record) {
  const int p = static_cast<int>(values.rows());
  const double lo = grid.empty() ? 0.0 : grid.front();

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
  for (int j = 0; j < p; ++j) {
    for (int i = j + 1; i < p; ++i) {
      if (values(i, j) > lo) edges.push_back({j, i, values(i, j)});
    }
  }
  detail::sort_descending(edges);

  detail::UnionFind uf(p);
  std::size_t next = 0;
  int active = 0;
  for (std::size_t g = grid.size(); g-- > 0;) {
    const double eps = grid[g];
    while (next < edges.size() && edges[next].weight > eps) {
      uf.unite(edges[next].a, edges[next].b);
      ++next;
      ++active;
    }
    record(g, uf, active);
  }
}

}  // namespace

BettiCurve betti_curve(const Eigen::MatrixXd& values, std::span<const double> grid) {
  const int p = static_cast<int>(values.rows());
  BettiCurve curve;
  curve.grid.assign(grid.begin(), grid.end());
  curve.beta0.assign(grid.size(), 0);
  curve.beta1.assign(grid.size(), 0);
  sweep(values, grid, [&](std::size_t g, detail::UnionFind& uf, int active_edges) {
    const int b0 = uf.components();
    curve.beta0[g] = b0;
    curve.beta1[g] = b0 - p + active_edges;  // Euler identity for graphs
  });
  return curve;
}

BettiCurve betti_curve(const WeightedNetwork& w) {
  const Filtration f = maximal_filtration(w);
  return betti_curve(w.weights(), f.thresholds);
}

BettiCurve betti_curve(const WeightedNetwork& w, std::span<const double> grid) {
  return betti_curve(w.weights(), grid);
}

std::vector<int> largest_component_curve(const Eigen::MatrixXd& values,
                                         std::span<const double> grid) {
  std::vector<int> gamma(grid.size(), 0);
  sweep(values, grid, [&](std::size_t g, detail::UnionFind& uf, int) {
    gamma[g] = uf.largest_component();
  });
  return gamma;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) {
    throw InputError("uniform_grid: need at least 2 points and hi > lo");
  }
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo + step * i;
  grid.back() = hi;
  return grid;
}

std::vector<double> merged_filtration_grid(const Eigen::MatrixXd& a,
                                           const Eigen::MatrixXd& b) {
  std::vector<double> grid;
  grid.push_back(0.0);
  for (const Eigen::MatrixXd* m : {&a, &b}) {
    for (Eigen::Index j = 0; j < m->cols(); ++j) {
      for (Eigen::Index i = j + 1; i < m->rows(); ++i) {
        if ((*m)(i, j) > 0.0) grid.push_back((*m)(i, j));
      }
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace netdist
