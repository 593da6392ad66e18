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

#include "netdist/inference.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>

#include "netdist/errors.hpp"
#include "netdist/filtration.hpp"
#include "netdist/ks_pvalue.hpp"
#include "netdist/rng.hpp"

namespace netdist {

namespace {

namespace mp = boost::multiprecision;

mp::cpp_int binomial_big(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  mp::cpp_int result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// All m-subsets of {0..total-1} in lexicographic order; the first one is the
// identity assignment {0..m-1}.
std::vector<std::vector<int>> lexicographic_combinations(int total, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(m);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = m - 1;
    while (i >= 0 && c[i] == total - m + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

struct SplitBuffers {
  Eigen::MatrixXd group1;
  Eigen::MatrixXd group2;
  std::vector<char> in_first;
};

void fill_split(const Eigen::MatrixXd& pooled, const std::vector<int>& subset,
                SplitBuffers& buf) {
  const int total = static_cast<int>(pooled.rows());
  const int m = static_cast<int>(subset.size());
  buf.in_first.assign(total, 0);
  for (int r = 0; r < m; ++r) {
    buf.group1.row(r) = pooled.row(subset[r]);
    buf.in_first[subset[r]] = 1;
  }
  int w = 0;
  for (int r = 0; r < total; ++r) {
    if (!buf.in_first[r]) buf.group2.row(w++) = pooled.row(r);
  }
}

}  // namespace

WeightBuilder WeightBuilder::correlation(WeightTransform transform) {
  WeightBuilder b;
  b.min_rows = 3;
  b.build = [transform](const Eigen::MatrixXd& rows) {
    return correlation_network(standardize(DataMatrix{rows, false}), transform);
  };
  return b;
}

std::vector<TestResult> permutation_test_multi(const DataMatrix& x1, const DataMatrix& x2,
                                               const WeightBuilder& builder,
                                               std::span<const NetworkStatistic> distances,
                                               const PermutationScheme& scheme,
                                               bool keep_null_samples) {
  if (x1.nodes() != x2.nodes()) {
    throw DimensionMismatch("permutation_test: node counts differ");
  }
  const int m = static_cast<int>(x1.observations());
  const int n = static_cast<int>(x2.observations());
  if (m < 2 || n < 2) throw TooFewRows("permutation_test: groups need at least 2 rows");
  if (std::min(m, n) < builder.min_rows) {
    throw TooFewRows("permutation_test: weight builder needs at least " +
                     std::to_string(builder.min_rows) + " rows per group");
  }

  Eigen::MatrixXd pooled(m + n, x1.nodes());
  pooled.topRows(m) = x1.values;
  pooled.bottomRows(n) = x2.values;

  SplitBuffers buf;
  buf.group1.resize(m, x1.nodes());
  buf.group2.resize(n, x1.nodes());

  auto evaluate = [&](const std::vector<int>& subset, std::vector<double>& out) {
    fill_split(pooled, subset, buf);
    const WeightedNetwork w1 = builder.build(buf.group1);
    const WeightedNetwork w2 = builder.build(buf.group2);
    for (std::size_t k = 0; k < distances.size(); ++k) out[k] = distances[k].fn(w1, w2);
  };

  const std::size_t n_stat = distances.size();
  std::vector<double> observed(n_stat);
  std::vector<std::vector<double>> nulls(n_stat);

  std::uint64_t used = 0;
  if (scheme.mode == PermutationScheme::Mode::exact) {
    const mp::cpp_int splits = binomial_big(static_cast<std::uint64_t>(m + n),
                                            static_cast<std::uint64_t>(m));
    if (splits > mp::cpp_int(scheme.exact_cap)) {
      throw CapExceeded("permutation_test: C(m+n, m) exceeds the exact-mode cap");
    }
    const auto subsets = lexicographic_combinations(m + n, m);
    used = subsets.size();
    for (auto& v : nulls) v.reserve(subsets.size());
    std::vector<double> values(n_stat);
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      evaluate(subsets[s], values);
      if (s == 0) observed = values;  // identity split
      for (std::size_t k = 0; k < n_stat; ++k) nulls[k].push_back(values[k]);
    }
  } else {
    std::vector<int> identity(m);
    std::iota(identity.begin(), identity.end(), 0);
    evaluate(identity, observed);

    used = scheme.draws;
    for (auto& v : nulls) v.reserve(scheme.draws);
    std::vector<int> order(m + n);
    std::vector<int> subset(m);
    std::vector<double> values(n_stat);
    for (std::uint64_t i = 0; i < scheme.draws; ++i) {
      std::mt19937_64 rng(derive_seed(scheme.seed, 0x7065726d75746573ULL, i));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      subset.assign(order.begin(), order.begin() + m);
      std::sort(subset.begin(), subset.end());
      evaluate(subset, values);
      for (std::size_t k = 0; k < n_stat; ++k) nulls[k].push_back(values[k]);
    }
  }

  std::vector<TestResult> results(n_stat);
  for (std::size_t k = 0; k < n_stat; ++k) {
    const auto at_least = static_cast<double>(
        std::count_if(nulls[k].begin(), nulls[k].end(),
                      [&](double v) { return v >= observed[k]; }));
    TestResult& r = results[k];
    r.observed =
        DistanceValue{observed[k], distances[k].method, distances[k].feature, std::nullopt};
    r.permutations_used = used;
    if (scheme.mode == PermutationScheme::Mode::exact) {
      r.p_value = at_least / static_cast<double>(used);
    } else {
      r.p_value = (at_least + 1.0) / (static_cast<double>(used) + 1.0);
    }
    if (keep_null_samples) r.null_samples = std::move(nulls[k]);
  }
  return results;
}

TestResult permutation_test(const DataMatrix& x1, const DataMatrix& x2,
                            const WeightBuilder& builder, const NetworkStatistic& distance,
                            const PermutationScheme& scheme, bool keep_null_samples) {
  const NetworkStatistic distances[] = {distance};
  return std::move(permutation_test_multi(x1, x2, builder, distances, scheme,
                                          keep_null_samples)[0]);
}

TestResult ks_test(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, KsFeature feature,
                   std::span<const double> grid) {
  TestResult r;
  r.observed = ks_distance(a, b, feature, grid);
  const long q = static_cast<long>(grid.size());
  const long d = static_cast<long>(std::ceil(r.observed.value));
  r.p_value = q <= kExactPvalueMaxGrid ? exact_ks_pvalue(d, q)
                                       : asymptotic_ks_pvalue(r.observed.value, q);
  r.permutations_used = 0;
  return r;
}

TestResult ks_test(const WeightedNetwork& a, const WeightedNetwork& b, KsFeature feature,
                   std::span<const double> grid) {
  return ks_test(a.weights(), b.weights(), feature, grid);
}

TestResult ks_test(const WeightedNetwork& a, const WeightedNetwork& b, KsFeature feature) {
  const std::vector<double> grid = merged_filtration_grid(a.weights(), b.weights());
  return ks_test(a.weights(), b.weights(), feature, grid);
}

}  // namespace netdist
