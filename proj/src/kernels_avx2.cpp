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

// Compiled with -mavx2 only. FMA stays disabled so that every product is
// rounded before the add, matching the scalar reference bit for bit.

#include <immintrin.h>

#include <bit>
#include <vector>

#include "hetspec/kernels.hpp"

namespace hetspec::kernels::avx2 {

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t j = 0; j < n4; j += 4) {
    const __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x + j));
    _mm256_storeu_pd(y + j, _mm256_add_pd(_mm256_loadu_pd(y + j), p));
  }
  for (std::size_t j = n4; j < n; ++j) {
    const double p = a * x[j];
    y[j] = y[j] + p;
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t j = 0; j < n4; j += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + j), _mm256_loadu_pd(y + j)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (std::size_t j = n4; j < n; ++j) {
    const double p = x[j] * y[j];
    total = total + p;
  }
  return total;
}

void subset_sums(const double* w, std::size_t k, double* out) {
  if (k < 2) {
    scalar::subset_sums(w, k, out);
    return;
  }
  const __m256d low = _mm256_setr_pd(0.0, w[0], w[1], w[0] + w[1]);
  const std::size_t high_count = std::size_t{1} << (k - 2);
  std::vector<double> high(high_count);
  high[0] = 0.0;
  for (std::size_t h = 1; h < high_count; ++h) {
    high[h] = high[h & (h - 1)] + w[2 + static_cast<std::size_t>(std::countr_zero(h))];
  }
  for (std::size_t h = 0; h < high_count; ++h) {
    _mm256_storeu_pd(out + (h << 2), _mm256_add_pd(_mm256_set1_pd(high[h]), low));
  }
}

}  // namespace hetspec::kernels::avx2
