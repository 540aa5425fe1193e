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

#pragma once

// Data-parallel inner loops shared by the table builder, the rate map and
// the gradient. Each kernel has a scalar reference and an AVX2 variant; the
// variant is picked once at startup from CPUID and may be overridden with
// HETSPEC_KERNELS=scalar|avx2|auto or select().
//
// The scalar references use the same lane structure as the vector code
// (4-way striped partial sums, no fused multiply-add), so every backend
// produces bit-identical results.

#include <cstddef>
#include <span>
#include <string_view>

namespace hetspec::kernels {

enum class Backend { scalar, avx2 };

struct KernelTable {
  std::string_view name;
  /// y[j] += a * x[j]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  /// sum_j x[j] * y[j], 4-way striped
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// out[C] = sum_{j in C} w[j] for every bitmask C < 2^k
  void (*subset_sums)(const double* w, std::size_t k, double* out);
};

namespace scalar {
void axpy(double a, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void subset_sums(const double* w, std::size_t k, double* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define HETSPEC_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy(double a, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void subset_sums(const double* w, std::size_t k, double* out);
}  // namespace avx2
#endif

bool backend_available(Backend b);
const KernelTable& table_for(Backend b);

const KernelTable& active();
Backend active_backend();
/// Throws ConfigError when the CPU cannot run `b`.
void select(Backend b);

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}

/// `out` must hold 2^w.size() entries.
void subset_sums(std::span<const double> w, std::span<double> out);

}  // namespace hetspec::kernels
