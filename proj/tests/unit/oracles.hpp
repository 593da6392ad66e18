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

// Test-only reference implementations. Each one re-derives a quantity the
// library computes, by a different algorithm, so the two can be compared.

#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "netdist/network.hpp"
#include "netdist/persistence.hpp"

namespace oracles {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Random symmetric weight matrix with uniform(0,1) weights; edge_prob < 1
// leaves some pairs unconnected (weight 0).
inline netdist::WeightedNetwork random_network(int p, std::mt19937_64& rng,
                                               double edge_prob = 1.0) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(p, p);
  for (int j = 0; j < p; ++j) {
    for (int i = j + 1; i < p; ++i) {
      if (unif(rng) <= edge_prob) {
        const double v = unif(rng);
        w(i, j) = v;
        w(j, i) = v;
      }
    }
  }
  return netdist::WeightedNetwork::from_weights(std::move(w));
}

// Minimax path weights by a Floyd-Warshall style relaxation.
inline Eigen::MatrixXd minimax_floyd_warshall(const Eigen::MatrixXd& w) {
  const int p = static_cast<int>(w.rows());
  Eigen::MatrixXd s = Eigen::MatrixXd::Constant(p, p, kInf);
  for (int i = 0; i < p; ++i) s(i, i) = 0.0;
  for (int j = 0; j < p; ++j) {
    for (int i = 0; i < p; ++i) {
      if (i != j && w(i, j) > 0.0) s(i, j) = w(i, j);
    }
  }
  for (int k = 0; k < p; ++k) {
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        s(i, j) = std::min(s(i, j), std::max(s(i, k), s(k, j)));
      }
    }
  }
  return s;
}

// Total weight of a minimum spanning forest by Prim's algorithm.
inline double prim_forest_weight(const Eigen::MatrixXd& w) {
  const int p = static_cast<int>(w.rows());
  std::vector<bool> visited(p, false);
  std::vector<double> best(p, kInf);
  double total = 0.0;
  for (int start = 0; start < p; ++start) {
    if (visited[start]) continue;
    std::fill(best.begin(), best.end(), kInf);
    best[start] = 0.0;
    while (true) {
      int u = -1;
      for (int i = 0; i < p; ++i) {
        if (!visited[i] && best[i] < kInf && (u == -1 || best[i] < best[u])) u = i;
      }
      if (u == -1) break;
      visited[u] = true;
      if (best[u] < kInf && u != start) total += best[u];
      for (int v = 0; v < p; ++v) {
        if (!visited[v] && w(u, v) > 0.0 && w(u, v) < best[v]) best[v] = w(u, v);
      }
    }
  }
  return total;
}

// Number of connected components of the graph with edges where value > eps,
// by BFS (no union-find involved).
inline int bfs_components(const Eigen::MatrixXd& values, double eps) {
  const int p = static_cast<int>(values.rows());
  std::vector<bool> seen(p, false);
  std::vector<int> stack;
  int components = 0;
  for (int start = 0; start < p; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = true;
    stack.assign(1, start);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < p; ++v) {
        if (!seen[v] && v != u && values(u, v) > eps) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return components;
}

// Exact P(D_q >= d) by enumerating all C(2q, q) monotone lattice paths and
// counting those whose maximum |u - v| reaches d. Returns the count pair so
// the caller can form the exact rational.
inline void count_lattice_paths(int q, int d, long& reaching, long& total) {
  reaching = 0;
  total = 0;
  const int steps = 2 * q;
  // depth-first over step sequences
  struct Frame {
    int step, u, v, max_gap;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, 0, 0});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.step == steps) {
      ++total;
      if (f.max_gap >= d) ++reaching;
      continue;
    }
    if (f.u < q) {
      stack.push_back({f.step + 1, f.u + 1, f.v,
                       std::max(f.max_gap, std::abs(f.u + 1 - f.v))});
    }
    if (f.v < q) {
      stack.push_back({f.step + 1, f.u, f.v + 1,
                       std::max(f.max_gap, std::abs(f.u - (f.v + 1)))});
    }
  }
}

// Reflection-principle count of the same band-restricted paths:
// A = sum_k (-1)^k C(2q, q - k d). Used as a second, closed-form oracle.
// Kept in long double, which is exact for the sizes the tests use.
inline long double reflection_inside_count(long q, long d,
                                           const std::vector<std::vector<long double>>& pascal) {
  long double a = 0.0L;
  int sign = 1;
  for (long k = 0;; ++k) {
    const long r1 = q - k * d;
    const long r2 = q + k * d;
    long double term = 0.0L;
    if (r1 >= 0 && r1 <= 2 * q) term += pascal[2 * q][r1];
    if (k > 0 && r2 >= 0 && r2 <= 2 * q) term += pascal[2 * q][r2];
    if (term == 0.0L) break;
    a += sign * term;
    sign = -sign;
  }
  return a;
}

// min over bijections of the max assignment cost, by subset dynamic
// programming; exact for the augmented-diagram matrices the tests build.
inline double assignment_bottleneck(const std::vector<std::vector<double>>& cost) {
  const int s = static_cast<int>(cost.size());
  if (s == 0) return 0.0;
  const std::size_t full = (static_cast<std::size_t>(1) << s);
  std::vector<double> f(full, kInf);
  f[0] = 0.0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const int row = __builtin_popcountll(mask) - 1;
    for (int j = 0; j < s; ++j) {
      if (!(mask & (static_cast<std::size_t>(1) << j))) continue;
      const double prev = f[mask ^ (static_cast<std::size_t>(1) << j)];
      f[mask] = std::min(f[mask], std::max(prev, cost[row][j]));
    }
  }
  return f[full - 1];
}

// The augmented cost matrix of two finite-point diagrams, following the
// published projection construction; shared by the oracle tests.
inline std::vector<std::vector<double>> augmented_costs(
    const std::vector<netdist::PersistencePoint>& a,
    const std::vector<netdist::PersistencePoint>& b) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  const int s = m + n;
  auto linf = [](double x1, double y1, double x2, double y2) {
    return std::max(std::abs(x1 - x2), std::abs(y1 - y2));
  };
  std::vector<std::vector<double>> cost(s, std::vector<double>(s, 0.0));
  for (int u = 0; u < s; ++u) {
    const bool u_real = u < m;
    const double ux = u_real ? a[u].birth : 0.5 * (b[u - m].birth + b[u - m].death);
    const double uy = u_real ? a[u].death : ux;
    for (int v = 0; v < s; ++v) {
      const bool v_real = v < n;
      const double vx = v_real ? b[v].birth : 0.5 * (a[v - n].birth + a[v - n].death);
      const double vy = v_real ? b[v].death : vx;
      cost[u][v] = (!u_real && !v_real) ? 0.0 : linf(ux, uy, vx, vy);
    }
  }
  return cost;
}

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations; an
// independent route to the matrix logarithm.
inline void jacobi_eigen(Eigen::MatrixXd a, Eigen::VectorXd& evals, Eigen::MatrixXd& evecs) {
  const int n = static_cast<int>(a.rows());
  evecs = Eigen::MatrixXd::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int q = 0; q < n; ++q) {
      for (int p = 0; p < q; ++p) off += a(p, q) * a(p, q);
    }
    if (off < 1e-26) break;
    for (int q = 1; q < n; ++q) {
      for (int p = 0; p < q; ++p) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(n, n);
        rot(p, p) = c;
        rot(q, q) = c;
        rot(p, q) = s;
        rot(q, p) = -s;
        a = rot.transpose() * a * rot;
        evecs = evecs * rot;
      }
    }
  }
  evals = a.diagonal();
}

inline double log_euclidean_by_jacobi(const Eigen::MatrixXd& r1, const Eigen::MatrixXd& r2,
                                      double alpha) {
  auto log_of = [&](const Eigen::MatrixXd& r) {
    Eigen::MatrixXd reg = r;
    reg.diagonal().array() += alpha;
    Eigen::VectorXd evals;
    Eigen::MatrixXd evecs;
    jacobi_eigen(reg, evals, evecs);
    return Eigen::MatrixXd(evecs * evals.array().log().matrix().asDiagonal() *
                           evecs.transpose());
  };
  return (log_of(r1) - log_of(r2)).norm();
}

}  // namespace oracles
