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

// Decision variable and delay model: the rate map r_i(A), the M/M/1 bound
// and the traffic-weighted objective with its gradient.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "hetspec/subset.hpp"
#include "hetspec/topology.hpp"

namespace hetspec {

/// Entries below this fraction of the band count as zero.
inline constexpr double kZeroThreshold = 1e-9;
/// r_i - lambda_i must exceed this for a queue to count as stable.
inline constexpr double kStabilityMargin = 1e-9;

struct TrafficProfile {
  std::vector<double> lambda;

  std::size_t k() const { return lambda.size(); }
  double total() const;
  /// lambda_i / sum_j lambda_j
  std::vector<double> weights() const;
  void validate() const;
};

using RateVector = std::vector<double>;

/// Sparse x(B): absent subsets hold zero bandwidth.
class SpectrumPartition {
 public:
  SpectrumPartition() = default;
  explicit SpectrumPartition(std::size_t k);

  static SpectrumPartition full_reuse(std::size_t k);
  static SpectrumPartition orthogonal(std::size_t k);
  /// dense[mask] for all 2^K masks; entries <= 0 are dropped.
  static SpectrumPartition from_dense(std::size_t k, std::span<const double> dense);

  std::size_t k() const { return k_; }
  double operator[](BtsSubset b) const;
  /// Setting a value <= 0 removes the entry.
  void set(BtsSubset b, double value);
  const std::map<BtsSubset, double>& entries() const { return x_; }

  double total() const;
  std::size_t support_size(double threshold = kZeroThreshold) const;
  std::vector<BtsSubset> support(double threshold = kZeroThreshold) const;
  std::vector<double> dense() const;
  /// b_i = sum over B containing i of x(B)
  std::vector<double> bandwidth_per_bts() const;
  double l1_distance(const SpectrumPartition& other) const;

  /// Throws ConfigError on negative entries, x(empty) > 0, or |sum - 1| > tol.
  void validate(double tol = 1e-9) const;

  friend bool operator==(const SpectrumPartition&, const SpectrumPartition&) = default;

 private:
  std::size_t k_ = 0;
  std::map<BtsSubset, double> x_;
};

/// r_i(A) = sum_B s_i(B & A) x(B)
double service_rate(const SpectrumPartition& partition, const SpectralEfficiencyTable& table,
                    BtsSubset active, std::size_t i);

/// r_i(S) for every i: each BTS assumes all others always interfere.
RateVector worst_case_rates(const SpectrumPartition& partition, const SpectralEfficiencyTable& table);

/// r_i(A) for every active set A, laid out [A * K + i].
std::vector<double> rates_by_active_set(const SpectrumPartition& partition,
                                        const SpectralEfficiencyTable& table);

/// 1 / (r - lambda); throws InstabilityError(0, ...) when r - lambda <= margin.
double mm1_sojourn(double rate, double lambda, double margin = kStabilityMargin);

double objective_from_rates(std::span<const double> rates, const TrafficProfile& traffic,
                            double margin = kStabilityMargin);

/// sum_i w_i / (r_i - lambda_i), w_i = lambda_i / sum_j lambda_j.
double objective(const SpectrumPartition& partition, const SpectralEfficiencyTable& table,
                 const TrafficProfile& traffic, double margin = kStabilityMargin);

/// d objective / d x(B) = -sum_{i in B} w_i s_i(B) / (r_i - lambda_i)^2 for
/// every mask B (index = mask; entry 0 is the empty set and always 0).
std::vector<double> gradient_from_rates(const SpectralEfficiencyTable& table, std::span<const double> rates,
                                        const TrafficProfile& traffic, double margin = kStabilityMargin);

std::vector<double> objective_gradient(const SpectrumPartition& partition, const SpectralEfficiencyTable& table,
                                       const TrafficProfile& traffic, double margin = kStabilityMargin);

/// Throws DimensionError unless partition, table and traffic agree on K.
void check_dimensions(const SpectrumPartition& partition, const SpectralEfficiencyTable& table);
void check_dimensions(const SpectralEfficiencyTable& table, const TrafficProfile& traffic);

}  // namespace hetspec
