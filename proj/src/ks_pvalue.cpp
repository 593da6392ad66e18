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

#include "netdist/ks_pvalue.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <vector>

#include "netdist/errors.hpp"

namespace netdist {

namespace mp = boost::multiprecision;

namespace {

mp::cpp_int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  mp::cpp_int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step
  }
  return result;
}

}  // namespace

double exact_ks_pvalue(long d, long q) {
  if (q < 1) throw InputError("exact_ks_pvalue: grid size must be >= 1");
  if (d <= 0) return 1.0;
  if (d > q) return 0.0;

  // Path counts inside the band, two rolling rows. Row u holds A(u, v) for
  // v in [max(0, u-d+1), min(q, u+d-1)]; the cells just outside the band are
  // kept at zero so the recurrence can read them blindly.
  std::vector<mp::cpp_int> prev(static_cast<std::size_t>(q) + 1);
  std::vector<mp::cpp_int> cur(static_cast<std::size_t>(q) + 1);

  prev[0] = 0;  // A(0,0)
  for (long v = 1; v <= std::min(q, d - 1); ++v) prev[static_cast<std::size_t>(v)] = 1;

  for (long u = 1; u <= q; ++u) {
    const long lo = std::max<long>(0, u - d + 1);
    const long hi = std::min(q, u + d - 1);
    if (lo > 0) cur[static_cast<std::size_t>(lo) - 1] = 0;
    if (hi < q) cur[static_cast<std::size_t>(hi) + 1] = 0;
    for (long v = lo; v <= hi; ++v) {
      const std::size_t s = static_cast<std::size_t>(v);
      if (v == 0) {
        cur[s] = 1;  // boundary A(u, 0) = 1 inside the band
      } else {
        cur[s] = cur[s - 1] + prev[s];
      }
    }
    std::swap(prev, cur);
  }

  const mp::cpp_int inside = prev[static_cast<std::size_t>(q)];
  const mp::cpp_int total = binomial(2 * q, q);
  const mp::cpp_rational tail(total - inside, total);
  return tail.convert_to<double>();
}

double asymptotic_ks_pvalue(double observed, long q, int terms) {
  if (q < 1) throw InputError("asymptotic_ks_pvalue: grid size must be >= 1");
  if (terms < 1) throw InputError("asymptotic_ks_pvalue: need at least one term");
  const double x = observed / std::sqrt(2.0 * static_cast<double>(q));
  double sum = 0.0;
  for (int i = 1; i <= terms; ++i) {
    const double term = 2.0 * std::exp(-2.0 * i * i * x * x);
    sum += (i % 2 == 1) ? term : -term;
  }
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace netdist
