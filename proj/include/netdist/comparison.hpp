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
#include <map>
#include <string>
#include <vector>

#include "netdist/inference.hpp"

namespace netdist {

// The seven distances compared by the simulation harness.
enum class ComparisonMethod { l1, l2, linf, bottleneck, gh, ks_beta0, ks_beta1 };

std::string_view to_string(ComparisonMethod m);
std::vector<ComparisonMethod> all_comparison_methods();

struct Scenario {
  int modules_a = 4;
  int modules_b = 4;

  bool is_null() const { return modules_a == modules_b; }
  std::string label() const;
};

struct ComparisonConfig {
  int nodes = 20;
  int observations = 5;  // rows per group; exact permutation count is
                         // C(2 * observations, observations)
  double sigma = 0.1;
  int trials = 100;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  int ks_grid_points = 101;  // uniform correlation grid on [0, 1]
  std::vector<ComparisonMethod> methods = all_comparison_methods();
  std::vector<Scenario> scenarios;
  int threads = 1;
};

struct ScenarioResult {
  Scenario scenario;
  std::map<ComparisonMethod, double> rejection_rate;

  // False-positive rate for null scenarios, false-negative (1 - rejection)
  // for alternatives.
  double error_rate(ComparisonMethod m) const;
};

struct ExperimentReport {
  ComparisonConfig config;
  std::vector<ScenarioResult> scenarios;
};

// Per trial, each group is one modular data-matrix draw (rows are the
// group's images). The matrix-norm, bottleneck (dimension 0) and GH
// distances get an exact row-permutation test on sqrt(1 - corr) weights; the
// KS distances are computed over the raw correlation matrices on a uniform
// [0, 1] grid with the combinatorial p-value. Rejections are tallied at
// `alpha`. Deterministic for a fixed seed regardless of thread count.
ExperimentReport run_comparison(const ComparisonConfig& config);

}  // namespace netdist
