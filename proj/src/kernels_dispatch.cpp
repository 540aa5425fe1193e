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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "hetspec/error.hpp"
#include "hetspec/kernels.hpp"

namespace hetspec::kernels {
namespace {

constexpr KernelTable kScalar{"scalar", &scalar::axpy, &scalar::dot, &scalar::subset_sums};
#ifdef HETSPEC_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{"avx2", &avx2::axpy, &avx2::dot, &avx2::subset_sums};
#endif

const KernelTable* initial_table() {
  Backend chosen = backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
  if (const char* env = std::getenv("HETSPEC_KERNELS")) {
    const std::string_view v{env};
    if (v == "scalar") chosen = Backend::scalar;
    else if (v == "avx2" && backend_available(Backend::avx2)) chosen = Backend::avx2;
  }
  return &table_for(chosen);
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#ifdef HETSPEC_HAVE_AVX2_KERNELS
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table_for(Backend b) {
#ifdef HETSPEC_HAVE_AVX2_KERNELS
  if (b == Backend::avx2) return kAvx2;
#endif
  (void)b;
  return kScalar;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

Backend active_backend() { return active().name == "avx2" ? Backend::avx2 : Backend::scalar; }

void select(Backend b) {
  if (!backend_available(b)) throw ConfigError("kernel backend not supported on this CPU");
  current().store(&table_for(b), std::memory_order_release);
}

void subset_sums(std::span<const double> w, std::span<double> out) {
  if (out.size() < (std::size_t{1} << w.size())) throw DimensionError("subset_sums: output too small");
  active().subset_sums(w.data(), w.size(), out.data());
}

}  // namespace hetspec::kernels
