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

// Exact event-driven simulation of K coupled queues. Each BTS is an FCFS
// queue with Poisson arrivals and exponential unit-mean packets; while the
// set of busy BTS's is A, BTS i drains at r_i(A).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hetspec/spectrum_model.hpp"

namespace hetspec {

struct SimConfig {
  double horizon = 1e5;
  double warmup = -1.0;  // negative: 1% of horizon
  std::uint64_t seed = 1;
  std::size_t replications = 10;
  std::size_t divergence_cap = 1'000'000;  // total packets in system

  double effective_warmup() const { return warmup < 0.0 ? 0.01 * horizon : warmup; }
  void validate() const;
};

/// Seed of replication `index` derived from the master seed (splitmix64).
std::uint64_t replication_seed(std::uint64_t master, std::size_t index);

struct SimulationStats {
  // Little's-law estimates from time-averaged queue lengths.
  std::vector<double> sojourn;        // per BTS
  std::vector<double> sojourn_ci95;   // half-widths across replications
  double aggregate_sojourn = 0.0;     // traffic weighted
  double aggregate_ci95 = 0.0;
  std::vector<double> queue_length;
  std::vector<double> queue_length_ci95;
  std::vector<double> active_fraction;

  // Direct per-packet tally (FCFS sojourn of packets arriving after warm-up).
  std::vector<double> tally_sojourn;
  double tally_aggregate_sojourn = 0.0;
  double tally_aggregate_ci95 = 0.0;
  std::uint64_t packets = 0;

  std::size_t replications = 0;
  bool diverging = false;
};

SimulationStats simulate(const SpectralEfficiencyTable& table, const SpectrumPartition& partition,
                         const TrafficProfile& traffic, const SimConfig& config);

struct BoundComparison {
  double analytic = 0.0;
  SimulationStats simulated;
};

/// Objective value alongside the simulated delay for the same partition.
BoundComparison compare_bound(const SpectralEfficiencyTable& table, const SpectrumPartition& partition,
                              const TrafficProfile& traffic, const SimConfig& config);

/// Two-sided 95% Student-t half-width of the mean of `samples`.
double ci95_half_width(const std::vector<double>& samples);

}  // namespace hetspec
