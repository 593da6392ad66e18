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

namespace netdist {

// Multivariate node data: rows are observations, columns are nodes. When
// `standardized` is set, every column has mean 0 and unit Euclidean norm, so
// inner products of columns are Pearson correlations.
struct DataMatrix {
  Eigen::MatrixXd values;
  bool standardized = false;

  Eigen::Index observations() const { return values.rows(); }
  Eigen::Index nodes() const { return values.cols(); }
};

// Centers each column and scales it to unit norm. Throws ConstantColumn when
// a column has zero variance. Requires at least two rows.
DataMatrix standardize(const DataMatrix& x);

// Checks the standardization invariant (|mean| < tol, |norm - 1| < tol).
bool is_standardized(const Eigen::MatrixXd& values, double tol = 1e-10);

// Pearson correlation matrix of a standardized DataMatrix, i.e. X^T X with
// entries clamped to [-1, 1]. Entries farther than 1e-12 outside that range
// raise NumericalDomain; the caller's data is then not unit-norm.
Eigen::MatrixXd correlation_matrix(const DataMatrix& x);

}  // namespace netdist
