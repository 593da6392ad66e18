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

#include "netdist/distance_value.hpp"
#include "netdist/network.hpp"
#include "netdist/persistence.hpp"

namespace netdist {

// Bottleneck distance between persistence diagrams of the same dimension:
// the smallest delta for which a bijection of the diagonally augmented
// diagrams moves no point farther than delta in the max norm.
//
// Finite and infinite deaths are matched separately. Infinite points match
// only among themselves, in sorted birth order; unequal counts make the
// distance +inf. Finite points are augmented with the diagonal projections
// ((b + d)/2, (b + d)/2) of the other diagram's points, and the optimum is
// found by binary search over the candidate costs with a maximum bipartite
// matching feasibility test (diagonal-to-diagonal pairs cost 0).
DistanceValue bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

// Bottleneck distance of the networks' persistence diagrams in `dimension`.
DistanceValue network_bottleneck(const WeightedNetwork& a, const WeightedNetwork& b,
                                 int dimension);

}  // namespace netdist
