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

#include "netdist/data_matrix.hpp"

#include <cmath>
#include <string>

#include "netdist/errors.hpp"

namespace netdist {

DataMatrix standardize(const DataMatrix& x) {
  const Eigen::Index n = x.observations();
  const Eigen::Index p = x.nodes();
  if (n < 2) throw InputError("standardize: need at least 2 observations");

  Eigen::MatrixXd out = x.values;
  for (Eigen::Index j = 0; j < p; ++j) {
    auto col = out.col(j);
    col.array() -= col.mean();
    const double norm = col.norm();
    if (norm == 0.0) {
      throw ConstantColumn(j, "standardize: column " + std::to_string(j) +
                                  " is constant (zero variance)");
    }
    col /= norm;
  }
  return DataMatrix{std::move(out), true};
}

bool is_standardized(const Eigen::MatrixXd& values, double tol) {
  for (Eigen::Index j = 0; j < values.cols(); ++j) {
    const auto col = values.col(j);
    if (std::abs(col.mean()) >= tol) return false;
    if (std::abs(col.norm() - 1.0) >= tol) return false;
  }
  return true;
}

Eigen::MatrixXd correlation_matrix(const DataMatrix& x) {
  if (!x.standardized) {
    throw NotStandardized("correlation_matrix: data matrix is not standardized");
  }
  Eigen::MatrixXd c = x.values.transpose() * x.values;
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      double& r = c(i, j);
      if (r > 1.0 || r < -1.0) {
        if (std::abs(r) > 1.0 + 1e-12) {
          throw NumericalDomain("correlation_matrix: |r| exceeds 1 beyond tolerance");
        }
        r = r > 0.0 ? 1.0 : -1.0;
      }
    }
  }
  return c;
}

}  // namespace netdist
