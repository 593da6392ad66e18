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

#include "netdist/cosine.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>

#include "netdist/errors.hpp"

namespace netdist {

namespace {

Eigen::MatrixXd basis_matrix(int samples, int degree) {
  Eigen::MatrixXd psi(samples, degree + 1);
  const double step = samples > 1 ? 1.0 / static_cast<double>(samples - 1) : 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = step * i;
    psi(i, 0) = 1.0;
    for (int l = 1; l <= degree; ++l) {
      psi(i, l) = std::numbers::sqrt2 * std::cos(l * std::numbers::pi * t);
    }
  }
  return psi;
}

}  // namespace

Eigen::VectorXd cosine_series_fit(std::span<const double> signal, int degree) {
  if (degree < 0) throw InputError("cosine_series_fit: degree must be >= 0");
  const int samples = static_cast<int>(signal.size());
  if (samples <= degree + 1) {
    throw DegreeTooHigh("cosine_series_fit: signal length must exceed degree + 1");
  }
  const Eigen::MatrixXd psi = basis_matrix(samples, degree);
  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(signal.data(), samples);
  return psi.colPivHouseholderQr().solve(y);
}

double cosine_series_eval(const Eigen::VectorXd& coefficients, double t) {
  double value = coefficients(0);
  for (Eigen::Index l = 1; l < coefficients.size(); ++l) {
    value += coefficients(l) * std::numbers::sqrt2 *
             std::cos(static_cast<double>(l) * std::numbers::pi * t);
  }
  return value;
}

Eigen::VectorXd cosine_series_values(const Eigen::VectorXd& coefficients, int samples) {
  if (samples < 2) throw InputError("cosine_series_values: need at least 2 samples");
  return basis_matrix(samples, static_cast<int>(coefficients.size()) - 1) * coefficients;
}

}  // namespace netdist
