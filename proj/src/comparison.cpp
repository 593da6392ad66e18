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

#include "netdist/comparison.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "netdist/bottleneck.hpp"
#include "netdist/errors.hpp"
#include "netdist/filtration.hpp"
#include "netdist/ks_pvalue.hpp"
#include "netdist/modular.hpp"
#include "netdist/norms.hpp"
#include "netdist/rng.hpp"
#include "netdist/single_linkage.hpp"

namespace netdist {

std::string_view to_string(ComparisonMethod m) {
  switch (m) {
    case ComparisonMethod::l1: return "l1";
    case ComparisonMethod::l2: return "l2";
    case ComparisonMethod::linf: return "linf";
    case ComparisonMethod::bottleneck: return "bottleneck";
    case ComparisonMethod::gh: return "gh";
    case ComparisonMethod::ks_beta0: return "ks_beta0";
    case ComparisonMethod::ks_beta1: return "ks_beta1";
  }
  return "?";
}

std::vector<ComparisonMethod> all_comparison_methods() {
  return {ComparisonMethod::l1,         ComparisonMethod::l2,
          ComparisonMethod::linf,       ComparisonMethod::bottleneck,
          ComparisonMethod::gh,         ComparisonMethod::ks_beta0,
          ComparisonMethod::ks_beta1};
}

std::string Scenario::label() const {
  return std::to_string(modules_a) + " vs " + std::to_string(modules_b);
}

double ScenarioResult::error_rate(ComparisonMethod m) const {
  const double rejection = rejection_rate.at(m);
  return scenario.is_null() ? rejection : 1.0 - rejection;
}

namespace {

bool is_ks(ComparisonMethod m) {
  return m == ComparisonMethod::ks_beta0 || m == ComparisonMethod::ks_beta1;
}

NetworkStatistic statistic_for(ComparisonMethod m) {
  switch (m) {
    case ComparisonMethod::l1:
      return {[](const WeightedNetwork& a, const WeightedNetwork& b) {
                return norm_distance(a, b, 1.0);
              },
              Method::l1, std::nullopt};
    case ComparisonMethod::l2:
      return {[](const WeightedNetwork& a, const WeightedNetwork& b) {
                return norm_distance(a, b, 2.0);
              },
              Method::l2, std::nullopt};
    case ComparisonMethod::linf:
      return {[](const WeightedNetwork& a, const WeightedNetwork& b) {
                return norm_distance(a, b, kInfOrder);
              },
              Method::linf, std::nullopt};
    case ComparisonMethod::bottleneck:
      return {[](const WeightedNetwork& a, const WeightedNetwork& b) {
                return network_bottleneck(a, b, 0).value;
              },
              Method::bottleneck, std::nullopt};
    case ComparisonMethod::gh:
      return {[](const WeightedNetwork& a, const WeightedNetwork& b) {
                return gh_distance(a, b).value;
              },
              Method::gh, std::nullopt};
    default:
      throw InputError("statistic_for: not a permutation method");
  }
}

struct TrialOutcome {
  // rejection flag per configured method, in config order
  std::vector<char> rejected;
};

}  // namespace

ExperimentReport run_comparison(const ComparisonConfig& config) {
  if (config.trials < 1) throw InputError("run_comparison: trials must be positive");
  if (config.scenarios.empty()) throw InputError("run_comparison: no scenarios");
  if (config.ks_grid_points < 2) throw InputError("run_comparison: KS grid too small");

  std::vector<ComparisonMethod> perm_methods;
  std::vector<NetworkStatistic> perm_stats;
  bool want_ks0 = false, want_ks1 = false;
  for (ComparisonMethod m : config.methods) {
    if (is_ks(m)) {
      (m == ComparisonMethod::ks_beta0 ? want_ks0 : want_ks1) = true;
    } else {
      perm_methods.push_back(m);
      perm_stats.push_back(statistic_for(m));
    }
  }

  const WeightBuilder builder = WeightBuilder::correlation(WeightTransform::sqrt_one_minus());
  const std::vector<double> ks_grid = uniform_grid(0.0, 1.0, config.ks_grid_points);
  const long ks_q = static_cast<long>(ks_grid.size());

  ExperimentReport report;
  report.config = config;

  for (std::size_t s = 0; s < config.scenarios.size(); ++s) {
    const Scenario scenario = config.scenarios[s];
    std::vector<TrialOutcome> outcomes(config.trials);

    auto run_trial = [&](int trial) {
      ModularConfig gen_a;
      gen_a.nodes = config.nodes;
      gen_a.modules = scenario.modules_a;
      gen_a.observations = config.observations;
      gen_a.sigma = config.sigma;
      gen_a.seed = derive_seed(config.seed, 2 * s, static_cast<std::uint64_t>(trial));
      ModularConfig gen_b = gen_a;
      gen_b.modules = scenario.modules_b;
      gen_b.seed = derive_seed(config.seed, 2 * s + 1, static_cast<std::uint64_t>(trial));

      const DataMatrix raw_a = generate_modular(gen_a);
      const DataMatrix raw_b = generate_modular(gen_b);

      TrialOutcome& out = outcomes[trial];
      out.rejected.assign(config.methods.size(), 0);

      std::vector<TestResult> perm_results;
      if (!perm_stats.empty()) {
        perm_results = permutation_test_multi(raw_a, raw_b, builder, perm_stats,
                                              PermutationScheme::exact());
      }

      double p_ks0 = 1.0, p_ks1 = 1.0;
      if (want_ks0 || want_ks1) {
        // KS runs on the correlation filtration directly; monotone feature
        // curves over a fixed [0, 1] grid with the combinatorial p-value.
        const Eigen::MatrixXd c_a = correlation_matrix(standardize(raw_a));
        const Eigen::MatrixXd c_b = correlation_matrix(standardize(raw_b));
        const BettiCurve curve_a = betti_curve(c_a, ks_grid);
        const BettiCurve curve_b = betti_curve(c_b, ks_grid);
        auto sup_gap = [&](const std::vector<int>& fa, const std::vector<int>& fb) {
          long gap = 0;
          for (std::size_t g = 0; g < fa.size(); ++g) {
            gap = std::max<long>(gap, std::abs(fa[g] - fb[g]));
          }
          return gap;
        };
        if (want_ks0) p_ks0 = exact_ks_pvalue(sup_gap(curve_a.beta0, curve_b.beta0), ks_q);
        if (want_ks1) p_ks1 = exact_ks_pvalue(sup_gap(curve_a.beta1, curve_b.beta1), ks_q);
      }

      std::size_t perm_index = 0;
      for (std::size_t k = 0; k < config.methods.size(); ++k) {
        double p = 1.0;
        if (config.methods[k] == ComparisonMethod::ks_beta0) {
          p = p_ks0;
        } else if (config.methods[k] == ComparisonMethod::ks_beta1) {
          p = p_ks1;
        } else {
          p = perm_results[perm_index++].p_value;
        }
        out.rejected[k] = p < config.alpha ? 1 : 0;
      }
    };

    const int threads = std::max(1, config.threads);
    if (threads == 1) {
      for (int t = 0; t < config.trials; ++t) run_trial(t);
    } else {
      std::atomic<int> next{0};
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&]() {
          for (int t = next.fetch_add(1); t < config.trials; t = next.fetch_add(1)) {
            run_trial(t);
          }
        });
      }
      for (auto& th : pool) th.join();
    }

    ScenarioResult result;
    result.scenario = scenario;
    for (std::size_t k = 0; k < config.methods.size(); ++k) {
      int rejections = 0;
      for (const TrialOutcome& out : outcomes) rejections += out.rejected[k];
      result.rejection_rate[config.methods[k]] =
          static_cast<double>(rejections) / static_cast<double>(config.trials);
    }
    report.scenarios.push_back(std::move(result));
  }
  return report;
}

}  // namespace netdist
