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

namespace netdist {

// Largest grid size for which the exact combinatorial p-value is used by
// default; beyond it the asymptotic series takes over.
inline constexpr long kExactPvalueMaxGrid = 10000;

// Exact tail probability P(D_q >= d) of the integer-valued KS network
// statistic on a q-point grid under the null.
//
// Counts the monotone lattice paths from (0,0) to (q,q) that stay strictly
// inside the band |u - v| < d via the recursion A(u,v) = A(u-1,v) + A(u,v-1)
// with boundary A(0,v) = A(u,0) = 1 inside the band and A(0,0) = 0; the
// result is 1 - A(q,q) / C(2q,q). Counts are kept in arbitrary-precision
// integers (they overflow 64 bits near q = 33) and the final ratio is a
// correctly rounded rational-to-double conversion.
//
// d <= 0 returns 1 (the statistic is nonnegative); d > q returns 0.
double exact_ks_pvalue(long d, long q);

// Truncated alternating series 2 * sum_i (-1)^(i-1) exp(-2 i^2 x^2) with
// x = observed / sqrt(2q), clamped to [0, 1]. Five terms are ample: the
// terms decay like exp(-2 i^2 x^2).
double asymptotic_ks_pvalue(double observed, long q, int terms = 5);

}  // namespace netdist
