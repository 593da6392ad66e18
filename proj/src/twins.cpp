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

#include "netdist/twins.hpp"

#include <cmath>
#include <limits>

#include "netdist/errors.hpp"
#include "netdist/filtration.hpp"

namespace netdist {

GroupCorrelation twin_group_correlation(std::span<const TwinPair> pairs) {
  if (pairs.size() < 3) {
    throw TooFewPairs("twin_group_correlation: need at least 3 twin pairs");
  }
  const Eigen::Index p = pairs[0].first.rows();
  for (const TwinPair& pair : pairs) {
    if (pair.first.rows() != p || pair.first.cols() != p || pair.second.rows() != p ||
        pair.second.cols() != p) {
      throw DimensionMismatch("twin_group_correlation: matrices must all be p x p");
    }
  }
  const double n = static_cast<double>(pairs.size());

  Eigen::MatrixXd c(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    for (Eigen::Index i = 0; i < p; ++i) {
      double mean_x = 0.0, mean_y = 0.0;
      for (const TwinPair& pair : pairs) {
        mean_x += pair.first(i, j);
        mean_y += pair.second(i, j);
      }
      mean_x /= n;
      mean_y /= n;
      double sxx = 0.0, syy = 0.0, sxy = 0.0;
      for (const TwinPair& pair : pairs) {
        const double dx = pair.first(i, j) - mean_x;
        const double dy = pair.second(i, j) - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
      }
      // zero variance on either side (the diagonal, typically) has no
      // defined correlation
      c(i, j) = (sxx > 0.0 && syy > 0.0) ? sxy / std::sqrt(sxx * syy)
                                         : std::numeric_limits<double>::quiet_NaN();
    }
  }
  Eigen::MatrixXd sym = 0.5 * (c + c.transpose());
  return GroupCorrelation{std::move(sym)};
}

Eigen::MatrixXd falconer_hi(const GroupCorrelation& mz, const GroupCorrelation& dz) {
  if (mz.values.rows() != dz.values.rows() || mz.values.cols() != dz.values.cols()) {
    throw DimensionMismatch("falconer_hi: group matrices differ in shape");
  }
  return 2.0 * (mz.values - dz.values);
}

Eigen::MatrixXd clamp_heritability(const Eigen::MatrixXd& hi) {
  return hi.cwiseMax(0.0).cwiseMin(1.0);
}

HeritabilityKs heritability_ks(const Eigen::MatrixXd& c_mz, const Eigen::MatrixXd& c_dz,
                               int grid_points) {
  if (c_mz.rows() != c_mz.cols() || c_dz.rows() != c_dz.cols() ||
      c_mz.rows() != c_dz.rows()) {
    throw DimensionMismatch("heritability_ks: matrices must be square and equal");
  }
  // NaN entries (undefined twin correlations) are allowed as long as they
  // are NaN on both sides of the diagonal; they never form edges.
  auto symmetric = [](const Eigen::MatrixXd& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (Eigen::Index i = j + 1; i < m.rows(); ++i) {
        const double a = m(i, j), b = m(j, i);
        if (std::isnan(a) && std::isnan(b)) continue;
        if (!(std::abs(a - b) <= 1e-9)) return false;
      }
    }
    return true;
  };
  if (!symmetric(c_mz) || !symmetric(c_dz)) {
    throw InputError("heritability_ks: matrices must be symmetric");
  }
  const std::vector<double> grid = uniform_grid(0.0, 1.0, grid_points);
  HeritabilityKs out;
  out.beta0 = ks_test(c_mz, c_dz, KsFeature::beta0, grid);
  out.beta1 = ks_test(c_mz, c_dz, KsFeature::beta1, grid);
  return out;
}

}  // namespace netdist
