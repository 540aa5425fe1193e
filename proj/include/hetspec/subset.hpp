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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace hetspec {

/// Largest supported number of BTS's. Tables hold K * 2^K entries.
inline constexpr std::size_t kMaxBts = 16;

/// A subset of base stations stored as a bitmask; bit i is BTS i (0-based).
class BtsSubset {
 public:
  constexpr BtsSubset() = default;
  constexpr explicit BtsSubset(std::uint32_t mask) : mask_(mask) {}

  static constexpr BtsSubset empty() { return BtsSubset{}; }
  static constexpr BtsSubset all(std::size_t k) { return BtsSubset{(std::uint32_t{1} << k) - 1U}; }
  static constexpr BtsSubset single(std::size_t i) { return BtsSubset{std::uint32_t{1} << i}; }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool contains(std::size_t i) const { return ((mask_ >> i) & 1U) != 0; }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool is_subset_of(BtsSubset other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr BtsSubset operator&(BtsSubset o) const { return BtsSubset{mask_ & o.mask_}; }
  constexpr BtsSubset operator|(BtsSubset o) const { return BtsSubset{mask_ | o.mask_}; }
  constexpr BtsSubset with(std::size_t i) const { return BtsSubset{mask_ | (std::uint32_t{1} << i)}; }
  constexpr BtsSubset without(std::size_t i) const { return BtsSubset{mask_ & ~(std::uint32_t{1} << i)}; }

  constexpr auto operator<=>(const BtsSubset&) const = default;

  /// "{1,3}" with 1-based BTS labels, as shown to users.
  std::string to_string() const;

 private:
  std::uint32_t mask_ = 0;
};

/// Number of subsets of a K-set, i.e. 2^K.
constexpr std::size_t subset_count(std::size_t k) { return std::size_t{1} << k; }

}  // namespace hetspec
