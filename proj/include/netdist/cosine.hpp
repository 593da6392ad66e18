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

namespace netdist {

// Least-squares fit of a signal sampled uniformly on [0, 1] (t_i = i/(N-1))
// against the cosine basis psi_0(t) = 1, psi_l(t) = sqrt(2) cos(l pi t).
// Returns the k+1 coefficients c_0..c_k. Throws DegreeTooHigh unless the
// signal is longer than k + 1.
Eigen::VectorXd cosine_series_fit(std::span<const double> signal, int degree);

// Reconstruction sum_l c_l psi_l(t).
double cosine_series_eval(const Eigen::VectorXd& coefficients, double t);

// Reconstruction on the same uniform grid the fit used.
Eigen::VectorXd cosine_series_values(const Eigen::VectorXd& coefficients, int samples);

}  // namespace netdist
