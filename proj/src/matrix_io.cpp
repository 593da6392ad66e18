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

#include "netdist/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "netdist/errors.hpp"

namespace netdist {

namespace {

// One CSV cell; accepts leading/trailing blanks and the "inf" literal.
double parse_cell(const std::string& cell, const std::string& path, std::size_t row,
                  std::size_t col) {
  std::size_t begin = cell.find_first_not_of(" \t\r");
  std::size_t end = cell.find_last_not_of(" \t\r");
  if (begin == std::string::npos) {
    throw InputError(path + ": row " + std::to_string(row + 1) + ", column " +
                     std::to_string(col + 1) + ": empty cell");
  }
  const std::string_view body(cell.data() + begin, end - begin + 1);
  if (body == "inf" || body == "+inf") return std::numeric_limits<double>::infinity();
  if (body == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    throw InputError(path + ": row " + std::to_string(row + 1) + ", column " +
                     std::to_string(col + 1) + ": cannot parse '" + std::string(body) +
                     "' as a number");
  }
  return value;
}

std::vector<std::vector<double>> read_rows(const std::string& path, bool skip_header) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_header && lineno == 1) continue;
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(ss, cell, ',')) {
      row.push_back(parse_cell(cell, path, rows.size(), col));
      ++col;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError(path + ": row " + std::to_string(lineno) + " has " +
                       std::to_string(row.size()) + " cells, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError(path + ": no data rows");
  return rows;
}

}  // namespace

Eigen::MatrixXd read_csv_matrix(const std::string& path, bool skip_header) {
  const auto rows = read_rows(path, skip_header);
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

std::vector<double> read_csv_column(const std::string& path, bool skip_header) {
  const auto rows = read_rows(path, skip_header);
  std::vector<double> out;
  if (rows.front().size() == 1) {
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[0]);
  } else if (rows.size() == 1) {
    out = rows.front();
  } else {
    throw InputError(path + ": expected a single column (or single row) of values");
  }
  return out;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_csv_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

void write_csv_matrix(const std::string& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot open for writing");
  write_csv_matrix(out, m);
}

void write_betti_csv(std::ostream& out, const BettiCurve& curve) {
  for (std::size_t g = 0; g < curve.grid.size(); ++g) {
    out << format_double(curve.grid[g]) << ',' << curve.beta0[g] << ',' << curve.beta1[g]
        << '\n';
  }
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram) {
  for (const PersistencePoint& pt : diagram.points) {
    out << format_double(pt.birth) << ',' << format_double(pt.death) << '\n';
  }
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char chunk[4096];
  while (in.read(chunk, sizeof chunk) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(chunk[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  return hash;
}

}  // namespace netdist
