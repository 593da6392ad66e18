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

#include "netdist/persistence.hpp"

#include <algorithm>

#include "edges.hpp"
#include "netdist/errors.hpp"
#include "union_find.hpp"

namespace netdist {

PersistenceDiagram persistence_diagram(const WeightedNetwork& w, int dimension) {
  if (dimension != 0 && dimension != 1) {
    throw InputError("persistence_diagram: dimension must be 0 or 1");
  }
  const int p = static_cast<int>(w.node_count());
  std::vector<detail::Edge> edges = detail::positive_edges(w.weights());
  detail::sort_ascending(edges);

  detail::UnionFind uf(p);
  PersistenceDiagram diagram;
  diagram.dimension = dimension;
  for (const detail::Edge& e : edges) {
    if (uf.unite(e.a, e.b)) {
      // a spanning-forest edge: one component dies at this weight
      if (dimension == 0) diagram.points.push_back({0.0, e.weight});
    } else {
      // a cycle is born; nothing ever fills it in a graph
      if (dimension == 1) diagram.points.push_back({e.weight, kInfiniteDeath});
    }
  }
  if (dimension == 0) {
    for (int c = uf.components(); c > 0; --c) {
      diagram.points.push_back({0.0, kInfiniteDeath});
    }
  }
  return diagram;
}

}  // namespace netdist
