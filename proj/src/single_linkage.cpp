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

#include "netdist/single_linkage.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "edges.hpp"
#include "netdist/errors.hpp"
#include "union_find.hpp"

namespace netdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Ultrametric single_linkage_matrix(const WeightedNetwork& w) {
  const int p = static_cast<int>(w.node_count());
  std::vector<detail::Edge> edges = detail::positive_edges(w.weights());
  detail::sort_ascending(edges);

  // Kruskal gives a minimum spanning forest; the merge height of (i, j) is
  // the largest forest edge on their path.
  detail::UnionFind uf(p);
  std::vector<std::vector<std::pair<int, double>>> forest(p);
  for (const detail::Edge& e : edges) {
    if (uf.unite(e.a, e.b)) {
      forest[e.a].push_back({e.b, e.weight});
      forest[e.b].push_back({e.a, e.weight});
    }
  }

  Eigen::MatrixXd s = Eigen::MatrixXd::Constant(p, p, kInf);
  std::vector<int> stack;
  for (int root = 0; root < p; ++root) {
    s(root, root) = 0.0;
    stack.assign(1, root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [v, weight] : forest[u]) {
        if (v != root && s(root, v) == kInf) {
          s(root, v) = std::max(s(root, u), weight);
          stack.push_back(v);
        }
      }
    }
  }
  // exact symmetry regardless of traversal order
  for (int j = 0; j < p; ++j) {
    for (int i = j + 1; i < p; ++i) s(j, i) = s(i, j);
  }
  return Ultrametric{std::move(s)};
}

DistanceValue gh_distance(const WeightedNetwork& a, const WeightedNetwork& b) {
  if (a.node_count() != b.node_count()) {
    throw DimensionMismatch("gh_distance: node counts differ");
  }
  const Ultrametric sa = single_linkage_matrix(a);
  const Ultrametric sb = single_linkage_matrix(b);
  const Eigen::Index p = a.node_count();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < p; ++j) {
    for (Eigen::Index i = j + 1; i < p; ++i) {
      const double x = sa.values(i, j);
      const double y = sb.values(i, j);
      const bool xi = x == kInf;
      const bool yi = y == kInf;
      if (xi && yi) continue;  // disconnected in both: no information
      if (xi || yi) {
        throw InfiniteSingleLinkage(
            "gh_distance: a node pair is disconnected in exactly one network");
      }
      worst = std::max(worst, std::abs(x - y));
    }
  }
  return DistanceValue{0.5 * worst, Method::gh, std::nullopt, std::nullopt};
}

}  // namespace netdist
