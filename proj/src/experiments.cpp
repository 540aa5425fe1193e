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

#include "hetspec/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "hetspec/error.hpp"

namespace hetspec {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::optimal:
      return "optimal";
    case Scheme::orthogonal:
      return "orthogonal";
    case Scheme::full_reuse:
      return "full-reuse";
  }
  return "unknown";
}

Scheme scheme_from_string(std::string_view s) {
  if (s == "optimal") return Scheme::optimal;
  if (s == "orthogonal") return Scheme::orthogonal;
  if (s == "full-reuse") return Scheme::full_reuse;
  throw ConfigError("unknown scheme '" + std::string(s) + "'");
}

void ExperimentConfig::validate() const {
  if (topology.num_bts == 0 || topology.num_bts > kMaxBts) throw ConfigError("num_bts must be in [1, 16]");
  radio.validate();
  sim.validate();
  if (schemes.empty()) throw ConfigError("scheme list is empty");
  for (std::size_t j = 1; j < sweep.size(); ++j) {
    if (!(sweep[j] > sweep[j - 1])) throw ConfigError("sweep grid must be strictly increasing");
  }
  for (double l : sweep) {
    if (!(l > 0.0)) throw ConfigError("sweep loads must be positive");
  }
  if (!(load > 0.0)) throw ConfigError("load must be positive");
  if (!(power.max_power > 0.0)) throw ConfigError("max_power must be positive");
}

Scenario build_scenario(const TopologyParams& topology, const RadioParams& radio) {
  const HexGrid grid = generate_hex_grid(topology.area_width_m, topology.area_height_m, topology.spacing_m);
  for (std::size_t attempt = 0; attempt <= topology.max_seed_retries; ++attempt) {
    const std::uint64_t seed = topology.seed + attempt;
    Deployment dep = associate(place_bts(grid, topology.num_bts, seed));
    try {
      SpectralEfficiencyTable table = build_efficiency_table(dep, radio);
      return Scenario{std::move(dep), std::move(table), seed};
    } catch (const OrphanBtsError&) {
    }
  }
  throw ConfigError("no drop without an orphan BTS within the retry budget");
}

TrafficProfile make_traffic(const ExperimentConfig& config, const Deployment& deployment, double load) {
  const std::size_t k = deployment.num_bts();
  const double per_bts = config.load_axis == LoadAxis::network_total ? load / static_cast<double>(k) : load;
  TrafficProfile traffic;
  if (config.traffic_model == TrafficModel::uniform) {
    traffic.lambda.assign(k, per_bts);
  } else {
    const std::vector<double> served = served_cells(deployment);
    double total = 0.0;
    for (double s : served) total += s;
    for (double s : served) traffic.lambda.push_back(per_bts * static_cast<double>(k) * s / total);
  }
  traffic.validate();
  return traffic;
}

SolveReport solve_scheme(Scheme scheme, const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                         const SolverOptions& options) {
  switch (scheme) {
    case Scheme::optimal:
      return solve(table, traffic, options);
    case Scheme::orthogonal:
      return solve_orthogonal_baseline(table, traffic, options);
    case Scheme::full_reuse:
      return full_reuse_baseline(table, traffic, options.stability_margin);
  }
  throw ConfigError("unknown scheme");
}

namespace {

SweepRow sweep_point(const ExperimentConfig& config, const Scenario& scenario, double load, Scheme scheme,
                     std::size_t load_index) {
  SweepRow row;
  row.load = load;
  row.scheme = scheme;
  try {
    const TrafficProfile traffic = make_traffic(config, scenario.deployment, load);
    const SolveReport report = solve_scheme(scheme, scenario.table, traffic, config.solver);
    if (report.status == SolveStatus::infeasible) {
      row.status = "infeasible";
      return row;
    }
    row.analytic_delay = report.objective_value;
    row.support_size = report.support_size;
    SimConfig sim = config.sim;
    sim.seed = replication_seed(config.sim.seed, 1000 + load_index);
    const SimulationStats stats = simulate(scenario.table, report.partition, traffic, sim);
    if (stats.diverging) {
      row.status = "diverging";
      return row;
    }
    row.simulated_delay = stats.aggregate_sojourn;
    row.ci95 = stats.aggregate_ci95;
    row.status = report.status == SolveStatus::optimal ? "ok" : std::string(to_string(report.status));
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& config, const Scenario& scenario) {
  config.validate();
  // Replications inside each point already run concurrently; points go in
  // (load, scheme) order.
  std::vector<SweepRow> rows;
  for (std::size_t li = 0; li < config.sweep.size(); ++li) {
    for (Scheme scheme : config.schemes) rows.push_back(sweep_point(config, scenario, config.sweep[li], scheme, li));
  }
  return rows;
}

std::string format_g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  const auto opt = [](const std::optional<double>& v) { return v ? format_g9(*v) : std::string(); };
  for (const SweepRow& r : rows) {
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    out << format_g9(r.load) << ',' << to_string(r.scheme) << ',' << opt(r.analytic_delay) << ','
        << opt(r.simulated_delay) << ',' << opt(r.ci95) << ',' << r.support_size << ',' << status << '\n';
  }
  return out.str();
}

std::string show_partition(const SpectrumPartition& partition) {
  const std::vector<BtsSubset> segments = partition.support();
  std::ostringstream out;
  char buf[64];
  out << "segment ";
  for (BtsSubset b : segments) {
    std::snprintf(buf, sizeof buf, " %8u", static_cast<unsigned>(b.mask()));
    out << buf;
  }
  out << "\nwidth   ";
  for (BtsSubset b : segments) {
    std::snprintf(buf, sizeof buf, " %8.5f", partition[b]);
    out << buf;
  }
  out << '\n';
  for (std::size_t i = 0; i < partition.k(); ++i) {
    std::snprintf(buf, sizeof buf, "BTS %-4zu", i + 1);
    out << buf;
    for (BtsSubset b : segments) out << (b.contains(i) ? " ########" : " ........");
    out << '\n';
  }
  return out.str();
}

std::string power_csv(const PowerIterationReport& report) {
  std::ostringstream out;
  out << "iteration,phase,objective,support_size,psd\n";
  for (const PowerIterationStep& s : report.steps) {
    out << s.iteration << ',' << to_string(s.phase) << ',' << format_g9(s.objective) << ','
        << s.partition.support_size() << ',';
    for (std::size_t i = 0; i < s.psd.size(); ++i) out << (i ? ";" : "") << format_g9(s.psd[i]);
    out << '\n';
  }
  out << "converged," << (report.converged ? "true" : "false") << ",,,\n";
  return out.str();
}

}  // namespace hetspec
