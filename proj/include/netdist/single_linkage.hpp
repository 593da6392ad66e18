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

#include "netdist/distance_value.hpp"
#include "netdist/network.hpp"

namespace netdist {

// Single-linkage matrix: s_ij is the merge height of i and j in the
// single-linkage dendrogram, i.e. the minimax path weight (the largest edge
// on the path between i and j in a minimum spanning forest). Satisfies the
// ultrametric inequality s_ij <= max(s_ik, s_kj); pairs in different
// components are +inf.
struct Ultrametric {
  Eigen::MatrixXd values;
};

Ultrametric single_linkage_matrix(const WeightedNetwork& w);

// Gromov-Hausdorff distance between networks sharing a node correspondence:
// half the max absolute difference of the single-linkage matrices. Pairs
// disconnected in both networks are skipped; a pair disconnected in exactly
// one raises InfiniteSingleLinkage.
DistanceValue gh_distance(const WeightedNetwork& a, const WeightedNetwork& b);

}  // namespace netdist
