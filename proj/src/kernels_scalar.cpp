/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The hetspec Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <bit>
#include <vector>

#include "hetspec/kernels.hpp"

namespace hetspec::kernels::scalar {

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const double p = a * x[j];
    y[j] = y[j] + p;
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t j = 0; j < n4; j += 4) {
    for (std::size_t l = 0; l < 4; ++l) {
      const double p = x[j + l] * y[j + l];
      acc[l] = acc[l] + p;
    }
  }
  double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (std::size_t j = n4; j < n; ++j) {
    const double p = x[j] * y[j];
    total = total + p;
  }
  return total;
}

void subset_sums(const double* w, std::size_t k, double* out) {
  out[0] = 0.0;
  if (k < 2) {
    if (k == 1) out[1] = w[0];
    return;
  }
  // Split each mask into two low bits and the rest; out = high[h] + low[l].
  const double low[4] = {0.0, w[0], w[1], w[0] + w[1]};
  const std::size_t high_count = std::size_t{1} << (k - 2);
  std::vector<double> high(high_count);
  high[0] = 0.0;
  for (std::size_t h = 1; h < high_count; ++h) {
    high[h] = high[h & (h - 1)] + w[2 + static_cast<std::size_t>(std::countr_zero(h))];
  }
  for (std::size_t h = 0; h < high_count; ++h) {
    for (std::size_t l = 0; l < 4; ++l) out[(h << 2) | l] = high[h] + low[l];
  }
}

}  // namespace hetspec::kernels::scalar
