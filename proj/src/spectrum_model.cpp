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

#include "hetspec/spectrum_model.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hetspec/error.hpp"
#include "hetspec/kernels.hpp"

namespace hetspec {

double TrafficProfile::total() const { return std::accumulate(lambda.begin(), lambda.end(), 0.0); }

std::vector<double> TrafficProfile::weights() const {
  const double sum = total();
  std::vector<double> w(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) w[i] = lambda[i] / sum;
  return w;
}

void TrafficProfile::validate() const {
  if (lambda.empty() || lambda.size() > kMaxBts) throw ConfigError("traffic must cover 1 to 16 BTS's");
  for (double l : lambda) {
    if (!(l > 0.0) || !std::isfinite(l)) throw ConfigError("arrival rates must be positive and finite");
  }
}

SpectrumPartition::SpectrumPartition(std::size_t k) : k_(k) {
  if (k == 0 || k > kMaxBts) throw ConfigError("number of BTS's must be in [1, 16]");
}

SpectrumPartition SpectrumPartition::full_reuse(std::size_t k) {
  SpectrumPartition p(k);
  p.set(BtsSubset::all(k), 1.0);
  return p;
}

SpectrumPartition SpectrumPartition::orthogonal(std::size_t k) {
  SpectrumPartition p(k);
  for (std::size_t i = 0; i < k; ++i) p.set(BtsSubset::single(i), 1.0 / static_cast<double>(k));
  return p;
}

SpectrumPartition SpectrumPartition::from_dense(std::size_t k, std::span<const double> dense) {
  SpectrumPartition p(k);
  if (dense.size() != subset_count(k)) throw DimensionError("dense partition must have 2^K entries");
  for (std::uint32_t m = 1; m < dense.size(); ++m) p.set(BtsSubset{m}, dense[m]);
  return p;
}

double SpectrumPartition::operator[](BtsSubset b) const {
  const auto it = x_.find(b);
  return it == x_.end() ? 0.0 : it->second;
}

void SpectrumPartition::set(BtsSubset b, double value) {
  if (b.mask() >= subset_count(k_)) throw DimensionError("subset " + b.to_string() + " outside K");
  if (value > 0.0) {
    x_[b] = value;
  } else {
    x_.erase(b);
  }
}

double SpectrumPartition::total() const {
  double t = 0.0;
  for (const auto& [b, v] : x_) t += v;
  return t;
}

std::size_t SpectrumPartition::support_size(double threshold) const {
  std::size_t n = 0;
  for (const auto& [b, v] : x_) n += (v > threshold) ? 1 : 0;
  return n;
}

std::vector<BtsSubset> SpectrumPartition::support(double threshold) const {
  std::vector<BtsSubset> out;
  for (const auto& [b, v] : x_) {
    if (v > threshold) out.push_back(b);
  }
  return out;
}

std::vector<double> SpectrumPartition::dense() const {
  std::vector<double> d(subset_count(k_), 0.0);
  for (const auto& [b, v] : x_) d[b.mask()] = v;
  return d;
}

std::vector<double> SpectrumPartition::bandwidth_per_bts() const {
  std::vector<double> b(k_, 0.0);
  for (const auto& [set, v] : x_) {
    for (std::size_t i = 0; i < k_; ++i) {
      if (set.contains(i)) b[i] += v;
    }
  }
  return b;
}

double SpectrumPartition::l1_distance(const SpectrumPartition& other) const {
  double d = 0.0;
  for (const auto& [b, v] : x_) d += std::abs(v - other[b]);
  for (const auto& [b, v] : other.x_) {
    if (!x_.contains(b)) d += std::abs(v);
  }
  return d;
}

void SpectrumPartition::validate(double tol) const {
  for (const auto& [b, v] : x_) {
    if (b.is_empty()) throw ConfigError("x(empty set) must be zero");
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("partition entries must be non-negative");
  }
  if (std::abs(total() - 1.0) > tol) {
    throw ConfigError("partition must sum to 1 (got " + std::to_string(total()) + ")");
  }
}

void check_dimensions(const SpectrumPartition& partition, const SpectralEfficiencyTable& table) {
  if (partition.k() != table.k()) {
    throw DimensionError("partition has K=" + std::to_string(partition.k()) + " but table has K=" +
                         std::to_string(table.k()));
  }
}

void check_dimensions(const SpectralEfficiencyTable& table, const TrafficProfile& traffic) {
  if (traffic.k() != table.k()) {
    throw DimensionError("traffic has K=" + std::to_string(traffic.k()) + " but table has K=" +
                         std::to_string(table.k()));
  }
}

double service_rate(const SpectrumPartition& partition, const SpectralEfficiencyTable& table, BtsSubset active,
                    std::size_t i) {
  check_dimensions(partition, table);
  if (i >= table.k()) throw DimensionError("BTS index out of range");
  double r = 0.0;
  for (const auto& [b, v] : partition.entries()) r += table(i, b & active) * v;
  return r;
}

RateVector worst_case_rates(const SpectrumPartition& partition, const SpectralEfficiencyTable& table) {
  check_dimensions(partition, table);
  const std::size_t k = table.k();
  RateVector r(k, 0.0);
  // Dense partitions go through the vector dot kernel; sparse ones are cheaper
  // to walk directly.
  if (4 * partition.entries().size() >= table.subsets()) {
    const std::vector<double> x = partition.dense();
    for (std::size_t i = 0; i < k; ++i) r[i] = kernels::dot(table.row(i), x);
    return r;
  }
  for (const auto& [b, v] : partition.entries()) {
    for (std::size_t i = 0; i < k; ++i) r[i] += table(i, b) * v;
  }
  return r;
}

std::vector<double> rates_by_active_set(const SpectrumPartition& partition, const SpectralEfficiencyTable& table) {
  check_dimensions(partition, table);
  const std::size_t k = table.k();
  const std::size_t n = table.subsets();
  std::vector<double> rates(n * k, 0.0);
  for (std::uint32_t a = 0; a < n; ++a) {
    const BtsSubset active{a};
    for (const auto& [b, v] : partition.entries()) {
      const BtsSubset on = b & active;
      for (std::size_t i = 0; i < k; ++i) {
        if (on.contains(i)) rates[a * k + i] += table(i, on) * v;
      }
    }
  }
  return rates;
}

double mm1_sojourn(double rate, double lambda, double margin) {
  if (!(rate - lambda > margin)) throw InstabilityError(0, rate, lambda);
  return 1.0 / (rate - lambda);
}

double objective_from_rates(std::span<const double> rates, const TrafficProfile& traffic, double margin) {
  if (rates.size() != traffic.k()) throw DimensionError("rate vector does not match traffic");
  const double total = traffic.total();
  double f = 0.0;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const double slack = rates[i] - traffic.lambda[i];
    if (!(slack > margin)) throw InstabilityError(i, rates[i], traffic.lambda[i]);
    f += (traffic.lambda[i] / total) / slack;
  }
  return f;
}

double objective(const SpectrumPartition& partition, const SpectralEfficiencyTable& table,
                 const TrafficProfile& traffic, double margin) {
  check_dimensions(table, traffic);
  return objective_from_rates(worst_case_rates(partition, table), traffic, margin);
}

std::vector<double> gradient_from_rates(const SpectralEfficiencyTable& table, std::span<const double> rates,
                                        const TrafficProfile& traffic, double margin) {
  check_dimensions(table, traffic);
  if (rates.size() != table.k()) throw DimensionError("rate vector does not match table");
  const double total = traffic.total();
  std::vector<double> grad(table.subsets(), 0.0);
  // s_i(B) = 0 for i outside B, so summing every row over all masks gives the
  // restricted sum over i in B.
  for (std::size_t i = 0; i < table.k(); ++i) {
    const double slack = rates[i] - traffic.lambda[i];
    if (!(slack > margin)) throw InstabilityError(i, rates[i], traffic.lambda[i]);
    const double coeff = -(traffic.lambda[i] / total) / (slack * slack);
    kernels::axpy(coeff, table.row(i), grad);
  }
  return grad;
}

std::vector<double> objective_gradient(const SpectrumPartition& partition, const SpectralEfficiencyTable& table,
                                       const TrafficProfile& traffic, double margin) {
  return gradient_from_rates(table, worst_case_rates(partition, table), traffic, margin);
}

}  // namespace hetspec
