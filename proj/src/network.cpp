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

#include "netdist/network.hpp"

#include <cmath>
#include <string>

#include "netdist/errors.hpp"

namespace netdist {

namespace {

void require_square(const Eigen::MatrixXd& w, const char* where) {
  if (w.rows() != w.cols()) {
    throw DimensionMismatch(std::string(where) + ": matrix is not square");
  }
}

}  // namespace

WeightedNetwork WeightedNetwork::from_weights(Eigen::MatrixXd w) {
  require_square(w, "WeightedNetwork");
  const Eigen::Index p = w.rows();
  for (Eigen::Index j = 0; j < p; ++j) {
    if (w(j, j) != 0.0) {
      throw InputError("WeightedNetwork: diagonal entry " + std::to_string(j) +
                       " is not zero");
    }
    for (Eigen::Index i = 0; i < p; ++i) {
      if (w(i, j) < 0.0) {
        throw InputError("WeightedNetwork: negative weight at (" + std::to_string(i) +
                         ", " + std::to_string(j) + ")");
      }
      if (std::abs(w(i, j) - w(j, i)) > 1e-12) {
        throw InputError("WeightedNetwork: asymmetry at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
      }
    }
  }
  return WeightedNetwork(std::move(w));
}

WeightedNetwork WeightedNetwork::from_raw_values(Eigen::MatrixXd w) {
  require_square(w, "WeightedNetwork");
  return WeightedNetwork(std::move(w));
}

double WeightTransform::apply(double r) const {
  switch (kind) {
    case Kind::identity_minus:
      return 1.0 - r;
    case Kind::sqrt_one_minus:
      return std::sqrt(std::max(0.0, 1.0 - r));
    case Kind::arccos:
      return std::acos(r);
    case Kind::power_arccos:
      return std::pow(std::acos(r), 1.0 / static_cast<double>(m));
    case Kind::power_sqrt:
      return std::pow(std::max(0.0, 1.0 - r), 1.0 / (2.0 * static_cast<double>(m)));
    case Kind::raw_correlation:
      return r;
  }
  return r;
}

bool WeightTransform::metric_family() const {
  switch (kind) {
    case Kind::sqrt_one_minus:
    case Kind::arccos:
    case Kind::power_arccos:
    case Kind::power_sqrt:
      return true;
    case Kind::identity_minus:
    case Kind::raw_correlation:
      return false;
  }
  return false;
}

std::optional<WeightTransform> WeightTransform::parse(std::string_view name) {
  if (name == "identity-minus") return identity_minus();
  if (name == "sqrt-one-minus") return sqrt_one_minus();
  if (name == "arccos") return arccos();
  if (name == "raw-correlation") return raw_correlation();
  // power-arccos-M / power-sqrt-M
  constexpr std::string_view pa = "power-arccos-";
  constexpr std::string_view ps = "power-sqrt-";
  for (const auto& [prefix, kind] :
       {std::pair{pa, Kind::power_arccos}, std::pair{ps, Kind::power_sqrt}}) {
    if (name.substr(0, prefix.size()) == prefix) {
      int m = 0;
      for (char c : name.substr(prefix.size())) {
        if (c < '0' || c > '9') return std::nullopt;
        m = m * 10 + (c - '0');
      }
      if (m >= 1) return WeightTransform{kind, m};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string WeightTransform::name() const {
  switch (kind) {
    case Kind::identity_minus:
      return "identity-minus";
    case Kind::sqrt_one_minus:
      return "sqrt-one-minus";
    case Kind::arccos:
      return "arccos";
    case Kind::power_arccos:
      return "power-arccos-" + std::to_string(m);
    case Kind::power_sqrt:
      return "power-sqrt-" + std::to_string(m);
    case Kind::raw_correlation:
      return "raw-correlation";
  }
  return "?";
}

WeightedNetwork correlation_network(const DataMatrix& x, WeightTransform transform) {
  if (transform.m < 1) throw InputError("correlation_network: power must be >= 1");
  Eigen::MatrixXd c = correlation_matrix(x);  // throws NotStandardized
  const Eigen::Index p = c.rows();
  if (transform.kind == WeightTransform::Kind::raw_correlation) {
    return WeightedNetwork::from_raw_values(std::move(c));
  }
  Eigen::MatrixXd w(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    w(j, j) = 0.0;
    for (Eigen::Index i = j + 1; i < p; ++i) {
      const double v = transform.apply(c(i, j));
      w(i, j) = v;
      w(j, i) = v;
    }
  }
  return WeightedNetwork::from_raw_values(std::move(w));
}

MetricReport check_metric(const WeightedNetwork& net, double tolerance) {
  const Eigen::MatrixXd& w = net.weights();
  const Eigen::Index p = net.node_count();
  MetricReport report;
  for (Eigen::Index j = 0; j < p; ++j) {
    if (w(j, j) != 0.0) report.identity_ok = false;
    for (Eigen::Index i = 0; i < p; ++i) {
      if (w(i, j) < 0.0) report.nonnegativity_ok = false;
      if (std::abs(w(i, j) - w(j, i)) > tolerance) report.symmetry_ok = false;
    }
  }
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      if (j == i) continue;
      const double wij = w(i, j);
      for (Eigen::Index k = 0; k < p; ++k) {
        if (k == i || k == j) continue;
        const double excess = wij - w(i, k) - w(k, j);
        if (excess > tolerance) {
          report.triangle_violations.push_back({i, j, k, excess});
        }
      }
    }
  }
  return report;
}

namespace {

MetricPreservingResult apply_elementwise(const WeightedNetwork& net,
                                         const std::function<double(double)>& f,
                                         bool verified) {
  const Eigen::MatrixXd& w = net.weights();
  const Eigen::Index p = net.node_count();
  Eigen::MatrixXd out(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    out(j, j) = 0.0;
    for (Eigen::Index i = j + 1; i < p; ++i) {
      const double v = f(w(i, j));
      if (v < 0.0) {
        throw NegativeWeight("metric_preserving: transform produced a negative weight");
      }
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return MetricPreservingResult{WeightedNetwork::from_weights(std::move(out)), verified};
}

}  // namespace

MetricPreservingResult metric_preserving(const WeightedNetwork& net, int root_m) {
  if (root_m < 1) throw InputError("metric_preserving: root must be >= 1");
  const double inv = 1.0 / static_cast<double>(root_m);
  return apply_elementwise(
      net, [inv](double v) { return std::pow(v, inv); }, true);
}

MetricPreservingResult metric_preserving(const WeightedNetwork& net,
                                         const std::function<double(double)>& f) {
  return apply_elementwise(net, f, false);
}

}  // namespace netdist
