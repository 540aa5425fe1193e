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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hetspec {

/// Bad argument or configuration (non-positive dimensions, K out of range, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Partition and table disagree on K.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A queue is not strictly stable: r_i - lambda_i <= margin.
class InstabilityError : public std::domain_error {
 public:
  InstabilityError(std::size_t bts, double rate, double lambda);

  std::size_t bts() const noexcept { return bts_; }
  double rate() const noexcept { return rate_; }
  double lambda() const noexcept { return lambda_; }

 private:
  std::size_t bts_;
  double rate_;
  double lambda_;
};

/// More BTS's requested than there are vertices.
class TooManyBtsError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// A BTS ended up with no associated cell.
class OrphanBtsError : public std::runtime_error {
 public:
  explicit OrphanBtsError(std::size_t bts);
  std::size_t bts() const noexcept { return bts_; }

 private:
  std::size_t bts_;
};

/// A BTS holds no bandwidth, so its PSD under a total power budget is undefined.
class ZeroBandwidthError : public std::runtime_error {
 public:
  explicit ZeroBandwidthError(std::size_t bts);
  std::size_t bts() const noexcept { return bts_; }

 private:
  std::size_t bts_;
};

/// Solver breakdown (LP cycling/iteration cap, singular systems).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hetspec
