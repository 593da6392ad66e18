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

#include "netdist/distance_value.hpp"

namespace netdist {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::l1: return "l1";
    case Method::l2: return "l2";
    case Method::linf: return "linf";
    case Method::log_euclidean: return "logeuclid";
    case Method::bottleneck: return "bottleneck";
    case Method::gh: return "gh";
    case Method::ks: return "ks";
  }
  return "?";
}

std::string_view to_string(KsFeature f) {
  switch (f) {
    case KsFeature::beta0: return "beta0";
    case KsFeature::beta1: return "beta1";
    case KsFeature::gamma: return "gamma";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "l1") return Method::l1;
  if (name == "l2") return Method::l2;
  if (name == "linf") return Method::linf;
  if (name == "logeuclid") return Method::log_euclidean;
  if (name == "bottleneck") return Method::bottleneck;
  if (name == "gh") return Method::gh;
  if (name == "ks") return Method::ks;
  return std::nullopt;
}

std::optional<KsFeature> parse_feature(std::string_view name) {
  if (name == "beta0") return KsFeature::beta0;
  if (name == "beta1") return KsFeature::beta1;
  if (name == "gamma") return KsFeature::gamma;
  return std::nullopt;
}

}  // namespace netdist
