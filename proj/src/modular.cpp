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

#include "netdist/modular.hpp"

#include <random>

#include "netdist/errors.hpp"
#include "netdist/rng.hpp"

namespace netdist {

void ModularConfig::validate() const {
  if (nodes < 1) throw InputError("ModularConfig: nodes must be positive");
  if (modules < 1 || nodes % modules != 0) {
    throw InputError("ModularConfig: module count must divide the node count");
  }
  if (observations < 3) throw InputError("ModularConfig: need at least 3 observations");
  if (sigma < 0.0) throw InputError("ModularConfig: sigma must be >= 0");
}

DataMatrix generate_modular(const ModularConfig& config) {
  config.validate();
  const int c = config.module_size();
  Eigen::MatrixXd data(config.observations, config.nodes);

  std::mt19937_64 rng(derive_seed(config.seed, 0x6d6f64756c6172ULL));
  std::normal_distribution<double> unit(0.0, 1.0);

  Eigen::VectorXd anchor(config.observations);
  for (int module = 0; module < config.modules; ++module) {
    for (int r = 0; r < config.observations; ++r) anchor(r) = unit(rng);
    for (int i = 0; i < c; ++i) {
      auto col = data.col(static_cast<Eigen::Index>(module) * c + i);
      // every node of the block, the first included, is anchor + fresh noise
      for (int r = 0; r < config.observations; ++r) {
        col(r) = anchor(r) + config.sigma * unit(rng);
      }
    }
  }
  return DataMatrix{std::move(data), false};
}

}  // namespace netdist
