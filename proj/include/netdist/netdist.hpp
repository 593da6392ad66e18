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

#include "netdist/bottleneck.hpp"
#include "netdist/comparison.hpp"
#include "netdist/cosine.hpp"
#include "netdist/data_matrix.hpp"
#include "netdist/distance_value.hpp"
#include "netdist/errors.hpp"
#include "netdist/filtration.hpp"
#include "netdist/inference.hpp"
#include "netdist/ks.hpp"
#include "netdist/ks_pvalue.hpp"
#include "netdist/matrix_io.hpp"
#include "netdist/modular.hpp"
#include "netdist/network.hpp"
#include "netdist/norms.hpp"
#include "netdist/persistence.hpp"
#include "netdist/rng.hpp"
#include "netdist/single_linkage.hpp"
#include "netdist/twins.hpp"
#include "netdist/version.hpp"
