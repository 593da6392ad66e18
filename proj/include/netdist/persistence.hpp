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

#include <limits>
#include <vector>

#include "netdist/network.hpp"

namespace netdist {

inline constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

struct PersistencePoint {
  double birth = 0.0;
  double death = kInfiniteDeath;

  bool finite() const { return death != kInfiniteDeath; }
};

// Multiset of (birth, death) pairs for one homology dimension. Deaths may be
// the +inf sentinel: features of a graph that nothing ever kills (the c
// surviving components in dimension 0, every cycle in dimension 1).
struct PersistenceDiagram {
  int dimension = 0;
  std::vector<PersistencePoint> points;
};

// Persistence of the edge-addition filtration (edges enter at their weight,
// sweeping upward). Dimension 0: all p components are born at 0 and die at
// the minimum-spanning-forest merge weights; components never merged get an
// infinite death. Dimension 1: every non-forest edge of weight w creates an
// independent cycle born at w that never dies.
PersistenceDiagram persistence_diagram(const WeightedNetwork& w, int dimension);

}  // namespace netdist
