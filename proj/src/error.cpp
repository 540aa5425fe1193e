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

#include <string>

#include "hetspec/error.hpp"
#include "hetspec/subset.hpp"

namespace hetspec {

InstabilityError::InstabilityError(std::size_t bts, double rate, double lambda)
    : std::domain_error("BTS " + std::to_string(bts + 1) + " unstable: rate " + std::to_string(rate) +
                        " <= arrival rate " + std::to_string(lambda)),
      bts_(bts),
      rate_(rate),
      lambda_(lambda) {}

OrphanBtsError::OrphanBtsError(std::size_t bts)
    : std::runtime_error("BTS " + std::to_string(bts + 1) + " serves no cell"), bts_(bts) {}

ZeroBandwidthError::ZeroBandwidthError(std::size_t bts)
    : std::runtime_error("BTS " + std::to_string(bts + 1) + " holds no bandwidth"), bts_(bts) {}

std::string BtsSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!contains(i)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace hetspec
