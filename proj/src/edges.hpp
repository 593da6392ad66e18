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
#include <algorithm>
#include <vector>

namespace netdist::detail {

struct Edge {
  int a;
  int b;
  double weight;
};

// Upper-triangle entries with weight > 0 (zero means "no edge").
inline std::vector<Edge> positive_edges(const Eigen::MatrixXd& w) {
  const int p = static_cast<int>(w.rows());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
  for (int j = 0; j < p; ++j) {
    for (int i = j + 1; i < p; ++i) {
      if (w(i, j) > 0.0) edges.push_back({j, i, w(i, j)});
    }
  }
  return edges;
}

// Ties resolved by node indices so results are deterministic.
inline void sort_ascending(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    if (x.weight != y.weight) return x.weight < y.weight;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
}

inline void sort_descending(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    if (x.weight != y.weight) return x.weight > y.weight;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
}

}  // namespace netdist::detail
