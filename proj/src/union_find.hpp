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

#include <numeric>
#include <vector>

namespace netdist::detail {

// Union-find with union by size and path halving.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), components_(n), largest_(n > 0 ? 1 : 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when x and y were in different components.
  bool unite(int x, int y) {
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) return false;
    if (size_[rx] < size_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    size_[rx] += size_[ry];
    if (size_[rx] > largest_) largest_ = size_[rx];
    --components_;
    return true;
  }

  int components() const { return components_; }
  int largest_component() const { return largest_; }
  int component_size(int x) { return size_[find(x)]; }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
  int largest_;
};

}  // namespace netdist::detail
