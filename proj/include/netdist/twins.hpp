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
#include <span>

#include "netdist/inference.hpp"

namespace netdist {

// One twin pair's connectivity matrices (both p x p).
struct TwinPair {
  Eigen::MatrixXd first;
  Eigen::MatrixXd second;
};

// Edge-level twin correlation matrix, symmetrized as (C + C^T) / 2.
struct GroupCorrelation {
  Eigen::MatrixXd values;
};

// Entry (i, j) is the Pearson correlation, across pairs, between the first
// twins' (i, j) connectivity and the second twins'. Entries with zero
// variance on either side (the diagonal, typically) come out NaN. Requires
// at least 3 pairs of equal shape; throws TooFewPairs / DimensionMismatch.
GroupCorrelation twin_group_correlation(std::span<const TwinPair> pairs);

// Heritability index 2 * (C_MZ - C_DZ), element-wise. Raw values are
// returned; clamp_heritability gives the [0, 1] report view.
Eigen::MatrixXd falconer_hi(const GroupCorrelation& mz, const GroupCorrelation& dz);
Eigen::MatrixXd clamp_heritability(const Eigen::MatrixXd& hi);

struct HeritabilityKs {
  TestResult beta0;
  TestResult beta1;
};

// KS comparison of the two group-correlation filtrations (edges where
// c > eps) on a uniform [0, 1] grid, with combinatorial p-values. The
// matrices are used as-is; no metric transform is applied.
HeritabilityKs heritability_ks(const Eigen::MatrixXd& c_mz, const Eigen::MatrixXd& c_dz,
                               int grid_points = 101);

}  // namespace netdist
