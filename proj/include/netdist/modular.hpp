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

#include <cstdint>

#include "netdist/data_matrix.hpp"

namespace netdist {

// Modular random-network generator. Nodes are grouped into `modules`
// consecutive blocks of equal size; each block has an i.i.d. standard normal
// anchor column, and every column of the block (the anchor's own observed
// column included) is the anchor plus fresh N(0, sigma^2) noise. True
// within-module correlation is 1 / (1 + sigma^2), between-module 0.
struct ModularConfig {
  int nodes = 20;         // p
  int modules = 4;        // must divide nodes
  int observations = 5;   // rows drawn per node, >= 3
  double sigma = 0.1;     // noise standard deviation, >= 0
  std::uint64_t seed = 0;

  int module_size() const { return nodes / modules; }
  void validate() const;  // throws InputError on violations
};

// Reproducible for a fixed seed: the draw order is anchors and noise
// module-major, column-major, row-minor.
DataMatrix generate_modular(const ModularConfig& config);

}  // namespace netdist
