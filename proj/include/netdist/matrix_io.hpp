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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netdist/filtration.hpp"
#include "netdist/persistence.hpp"

namespace netdist {

// Headerless CSV of reals, row-major. `skip_header` drops the first row.
// Parse failures raise InputError naming the file, row and column.
Eigen::MatrixXd read_csv_matrix(const std::string& path, bool skip_header = false);

// Single-column (or single-row) CSV as a vector.
std::vector<double> read_csv_column(const std::string& path, bool skip_header = false);

// Values are written with shortest round-trip formatting, so output is
// byte-stable across runs.
void write_csv_matrix(std::ostream& out, const Eigen::MatrixXd& m);
void write_csv_matrix(const std::string& path, const Eigen::MatrixXd& m);

// Columns: epsilon, beta0, beta1.
void write_betti_csv(std::ostream& out, const BettiCurve& curve);

// Columns: birth, death; infinite deaths are the literal "inf".
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram);

std::string format_double(double v);

// FNV-1a 64-bit digest of a file's bytes, for run manifests.
std::uint64_t fnv1a64_file(const std::string& path);

}  // namespace netdist
