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

// Experiment driver: scenario construction, load sweeps over the three
// allocation schemes, partition rendering and the power-control trace.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hetspec/optimizer.hpp"
#include "hetspec/power_iteration.hpp"
#include "hetspec/queue_sim.hpp"
#include "hetspec/topology.hpp"

namespace hetspec {

enum class Scheme { optimal, orthogonal, full_reuse };
std::string_view to_string(Scheme s);
Scheme scheme_from_string(std::string_view s);

/// How a scalar load maps to per-BTS arrival rates.
enum class TrafficModel {
  uniform,       // every BTS gets the same rate
  proportional,  // rate proportional to the number of hexagons served
};

/// Whether the load axis is the per-BTS average or the network total.
enum class LoadAxis { per_bts, network_total };

struct TopologyParams {
  double area_width_m = 100.0;
  double area_height_m = 100.0;
  double spacing_m = 20.0;
  std::size_t num_bts = 7;
  std::uint64_t seed = 1;
  std::size_t max_seed_retries = 100;  // re-drops after an orphan BTS
};

struct PowerParams {
  double max_power = 1.0;
  double tol = 1e-4;
  std::size_t max_iters = 20;
};

struct ExperimentConfig {
  TopologyParams topology;
  RadioParams radio;
  TrafficModel traffic_model = TrafficModel::uniform;
  LoadAxis load_axis = LoadAxis::per_bts;
  std::vector<double> sweep;
  std::vector<Scheme> schemes{Scheme::optimal, Scheme::orthogonal, Scheme::full_reuse};
  double load = 1.0;  // single-point commands
  SimConfig sim;
  SolverOptions solver;
  PowerParams power;
  std::string output;  // empty: stdout

  void validate() const;
};

struct Scenario {
  Deployment deployment;
  SpectralEfficiencyTable table;
  std::uint64_t seed_used = 0;
};

/// Generates grid, drop and association; re-drops with seed+1, seed+2, ...
/// when a BTS ends up serving no hexagon.
Scenario build_scenario(const TopologyParams& topology, const RadioParams& radio);

TrafficProfile make_traffic(const ExperimentConfig& config, const Deployment& deployment, double load);

SolveReport solve_scheme(Scheme scheme, const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                         const SolverOptions& options);

struct SweepRow {
  double load = 0.0;
  Scheme scheme = Scheme::optimal;
  std::optional<double> analytic_delay;
  std::optional<double> simulated_delay;
  std::optional<double> ci95;
  std::size_t support_size = 0;
  std::string status;  // ok | infeasible | diverging | max-iterations | error: ...
};

/// Rows come out in (load, scheme) order. Every scheme at a given load
/// simulates with the same seed.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config, const Scenario& scenario);

inline constexpr std::string_view kSweepCsvHeader =
    "load,scheme,analytic_delay,simulated_delay,ci95,support_size,status";

std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Floats in CSV output: 9 significant digits.
std::string format_g9(double v);

/// One row per BTS, one column per segment (sorted by bitmask), '#' marks
/// the BTS's that transmit on a segment.
std::string show_partition(const SpectrumPartition& partition);

std::string power_csv(const PowerIterationReport& report);

}  // namespace hetspec
