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

#include "netdist/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "netdist/errors.hpp"

namespace netdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Bipartite graph on the augmented diagrams: left = A's finite points then
// the projections of B's, right = B's finite points then the projections of
// A's. Both sides have size |A| + |B|.
struct AugmentedCosts {
  int size = 0;
  int left_real = 0;   // first left_real left vertices are A's points
  int right_real = 0;  // first right_real right vertices are B's points
  std::vector<double> cost;  // row-major size x size

  double operator()(int u, int v) const { return cost[static_cast<std::size_t>(u) * size + v]; }
};

double linf(double x1, double y1, double x2, double y2) {
  return std::max(std::abs(x1 - x2), std::abs(y1 - y2));
}

AugmentedCosts build_costs(const std::vector<PersistencePoint>& a,
                           const std::vector<PersistencePoint>& b) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  AugmentedCosts g;
  g.size = m + n;
  g.left_real = m;
  g.right_real = n;
  g.cost.assign(static_cast<std::size_t>(g.size) * g.size, 0.0);

  auto proj = [](const PersistencePoint& pt) { return 0.5 * (pt.birth + pt.death); };

  for (int u = 0; u < g.size; ++u) {
    const bool u_real = u < m;
    const double ux = u_real ? a[u].birth : proj(b[u - m]);
    const double uy = u_real ? a[u].death : ux;
    for (int v = 0; v < g.size; ++v) {
      const bool v_real = v < n;
      const double vx = v_real ? b[v].birth : proj(a[v - n]);
      const double vy = v_real ? b[v].death : vx;
      // diagonal-to-diagonal pairs are free
      g.cost[static_cast<std::size_t>(u) * g.size + v] =
          (!u_real && !v_real) ? 0.0 : linf(ux, uy, vx, vy);
    }
  }
  return g;
}

// Hopcroft-Karp on the edges with cost <= delta. match_* carry a partial
// matching in and out, so feasibility tests at growing delta only augment.
class ThresholdMatcher {
public:
  explicit ThresholdMatcher(const AugmentedCosts& g)
      : g_(g),
        match_left_(g.size, -1),
        match_right_(g.size, -1),
        dist_(g.size),
        matched_(0) {}

  void reset() {
    std::fill(match_left_.begin(), match_left_.end(), -1);
    std::fill(match_right_.begin(), match_right_.end(), -1);
    matched_ = 0;
  }

  // Grows the current matching using only edges of cost <= delta; returns
  // true when it becomes perfect. Monotone: call with nondecreasing delta.
  bool feasible(double delta) {
    while (matched_ < g_.size) {
      if (!bfs(delta)) return false;
      for (int u = 0; u < g_.size; ++u) {
        if (match_left_[u] == -1 && dfs(u, delta)) ++matched_;
      }
    }
    return true;
  }

private:
  bool bfs(double delta) {
    std::queue<int> q;
    for (int u = 0; u < g_.size; ++u) {
      if (match_left_[u] == -1) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = -1;
      }
    }
    bool reachable = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < g_.size; ++v) {
        if (g_(u, v) > delta) continue;
        const int w = match_right_[v];
        if (w == -1) {
          reachable = true;
        } else if (dist_[w] == -1) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable;
  }

  bool dfs(int u, double delta) {
    for (int v = 0; v < g_.size; ++v) {
      if (g_(u, v) > delta) continue;
      const int w = match_right_[v];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w, delta))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = -1;
    return false;
  }

  const AugmentedCosts& g_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
  int matched_;
};

// Minimal delta among the pairwise costs admitting a perfect matching.
double finite_part_bottleneck(const std::vector<PersistencePoint>& a,
                              const std::vector<PersistencePoint>& b) {
  if (a.empty() && b.empty()) return 0.0;
  const AugmentedCosts g = build_costs(a, b);

  std::vector<double> candidates = g.cost;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Every vertex needs some partner within delta, which bounds the answer
  // from below and usually pins it: start there and gallop upward reusing
  // the partial matching, then binary-search the remaining window with
  // fresh tests.
  double lower = 0.0;
  for (int u = 0; u < g.size; ++u) {
    double best = kInf;
    for (int v = 0; v < g.size; ++v) best = std::min(best, g(u, v));
    lower = std::max(lower, best);
  }
  for (int v = 0; v < g.size; ++v) {
    double best = kInf;
    for (int u = 0; u < g.size; ++u) best = std::min(best, g(u, v));
    lower = std::max(lower, best);
  }

  std::size_t lo = static_cast<std::size_t>(
      std::lower_bound(candidates.begin(), candidates.end(), lower) - candidates.begin());

  ThresholdMatcher matcher(g);
  std::size_t step = 1;
  std::size_t hi = lo;
  while (!matcher.feasible(candidates[hi])) {
    lo = hi + 1;
    hi = std::min(hi + step, candidates.size() - 1);
    step *= 2;
  }
  // candidates[hi] is feasible, everything below candidates[lo] is not
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ThresholdMatcher probe(g);
    if (probe.feasible(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

// Infinite-death points can only match each other; the sup-optimal pairing
// of two equally sized sets on a line is the sorted one.
double infinite_part_bottleneck(std::vector<double> births_a, std::vector<double> births_b) {
  if (births_a.size() != births_b.size()) return kInf;
  std::sort(births_a.begin(), births_a.end());
  std::sort(births_b.begin(), births_b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < births_a.size(); ++i) {
    worst = std::max(worst, std::abs(births_a[i] - births_b[i]));
  }
  return worst;
}

}  // namespace

DistanceValue bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  if (a.dimension != b.dimension) {
    throw DimensionMismatch("bottleneck_distance: homology dimensions differ");
  }
  std::vector<PersistencePoint> fin_a, fin_b;
  std::vector<double> inf_a, inf_b;
  for (const auto& pt : a.points) {
    if (pt.finite()) fin_a.push_back(pt); else inf_a.push_back(pt.birth);
  }
  for (const auto& pt : b.points) {
    if (pt.finite()) fin_b.push_back(pt); else inf_b.push_back(pt.birth);
  }
  const double inf_part = infinite_part_bottleneck(std::move(inf_a), std::move(inf_b));
  const double value =
      inf_part == kInf ? kInf : std::max(inf_part, finite_part_bottleneck(fin_a, fin_b));
  return DistanceValue{value, Method::bottleneck, std::nullopt, std::nullopt};
}

DistanceValue network_bottleneck(const WeightedNetwork& a, const WeightedNetwork& b,
                                 int dimension) {
  if (a.node_count() != b.node_count()) {
    throw DimensionMismatch("network_bottleneck: node counts differ");
  }
  return bottleneck_distance(persistence_diagram(a, dimension),
                             persistence_diagram(b, dimension));
}

}  // namespace netdist
