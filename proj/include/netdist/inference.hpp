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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "netdist/data_matrix.hpp"
#include "netdist/distance_value.hpp"
#include "netdist/ks.hpp"
#include "netdist/network.hpp"

namespace netdist {

struct PermutationScheme {
  enum class Mode { exact, monte_carlo };

  Mode mode = Mode::exact;
  std::uint64_t draws = 10000;          // monte_carlo only
  std::uint64_t seed = 0;               // monte_carlo only
  std::uint64_t exact_cap = 1000000;    // C(m+n, m) must not exceed this

  static PermutationScheme exact(std::uint64_t cap = 1000000) {
    PermutationScheme s;
    s.mode = Mode::exact;
    s.exact_cap = cap;
    return s;
  }
  static PermutationScheme monte_carlo(std::uint64_t draws, std::uint64_t seed) {
    PermutationScheme s;
    s.mode = Mode::monte_carlo;
    s.draws = draws;
    s.seed = seed;
    return s;
  }
};

struct TestResult {
  DistanceValue observed;
  double p_value = 1.0;
  std::vector<double> null_samples;     // filled only on request
  std::uint64_t permutations_used = 0;  // group splits evaluated (exact mode
                                        // includes the identity split)
};

// Maps a data matrix (rows = observations) to a network. min_rows guards
// degenerate builders: correlations from fewer than 3 rows are +-1 by
// construction.
struct WeightBuilder {
  std::function<WeightedNetwork(const Eigen::MatrixXd&)> build;
  int min_rows = 2;

  static WeightBuilder correlation(WeightTransform transform);
};

// A network distance together with its reporting metadata.
struct NetworkStatistic {
  std::function<double(const WeightedNetwork&, const WeightedNetwork&)> fn;
  Method method = Method::l1;
  std::optional<KsFeature> feature;
};

// Two-sample permutation test on a network distance. The m+n rows are pooled
// and re-split into groups of sizes m and n; both networks are rebuilt per
// split and the distance recomputed. Exact mode enumerates all C(m+n, m)
// splits once, in lexicographic order, the identity split included; the
// p-value is #{null >= observed} / #splits (ties count). Monte-Carlo mode
// draws uniform splits from a deterministic per-draw seed stream and uses
// the (b + 1)/(N + 1) estimate.
//
// Throws TooFewRows when a group is smaller than the builder's min_rows,
// CapExceeded when exact enumeration would exceed scheme.exact_cap, and
// DimensionMismatch when the column counts differ.
TestResult permutation_test(const DataMatrix& x1, const DataMatrix& x2,
                            const WeightBuilder& builder, const NetworkStatistic& distance,
                            const PermutationScheme& scheme, bool keep_null_samples = false);

// Same sweep evaluated for several distances at once; the networks for each
// split are built a single time. Results are ordered like `distances`.
std::vector<TestResult> permutation_test_multi(const DataMatrix& x1, const DataMatrix& x2,
                                               const WeightBuilder& builder,
                                               std::span<const NetworkStatistic> distances,
                                               const PermutationScheme& scheme,
                                               bool keep_null_samples = false);

// Combinatorial KS test: computes the KS distance on `grid`, then the exact
// tail probability with d = ceil(distance) and q = grid size (asymptotic
// series beyond kExactPvalueMaxGrid grid points). No resampling happens.
TestResult ks_test(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, KsFeature feature,
                   std::span<const double> grid);
TestResult ks_test(const WeightedNetwork& a, const WeightedNetwork& b, KsFeature feature,
                   std::span<const double> grid);
// Defaults to the merged filtration grid.
TestResult ks_test(const WeightedNetwork& a, const WeightedNetwork& b, KsFeature feature);

}  // namespace netdist
