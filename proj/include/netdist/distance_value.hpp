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

#include <optional>
#include <string_view>

namespace netdist {

enum class Method { l1, l2, linf, log_euclidean, bottleneck, gh, ks };

enum class KsFeature { beta0, beta1, gamma };

struct DistanceValue {
  double value = 0.0;
  Method method = Method::l1;
  std::optional<KsFeature> feature;           // KS only
  std::optional<double> argmax_threshold;     // KS only, smallest maximizer
};

std::string_view to_string(Method m);
std::string_view to_string(KsFeature f);
std::optional<Method> parse_method(std::string_view name);
std::optional<KsFeature> parse_feature(std::string_view name);

}  // namespace netdist
