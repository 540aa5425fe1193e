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

#include "hetspec/power_iteration.hpp"

#include <cmath>
#include <limits>

#include "hetspec/error.hpp"

namespace hetspec {

void PowerBudget::validate() const {
  if (max_power.empty()) throw ConfigError("power budget is empty");
  for (double p : max_power) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ConfigError("maximum transmit power must be positive");
  }
}

std::string_view to_string(Phase p) {
  return p == Phase::spectrum_update ? "spectrum-update" : "psd-update";
}

std::vector<double> update_psd(const SpectrumPartition& partition, const PowerBudget& budget) {
  budget.validate();
  if (budget.max_power.size() != partition.k()) throw DimensionError("power budget does not match K");
  const std::vector<double> band = partition.bandwidth_per_bts();
  std::vector<double> psd(band.size());
  for (std::size_t i = 0; i < band.size(); ++i) {
    if (!(band[i] > 0.0)) throw ZeroBandwidthError(i);
    psd[i] = budget.max_power[i] / band[i];
  }
  return psd;
}

PowerIterationReport alternate(const Deployment& deployment, const RadioParams& radio, const PowerBudget& budget,
                               const TrafficProfile& traffic, double tol, std::size_t max_iters,
                               const SolverOptions& options) {
  budget.validate();
  if (budget.max_power.size() != deployment.num_bts()) throw DimensionError("power budget does not match K");

  PowerIterationReport report;
  std::vector<double> psd = budget.max_power;  // spread over the whole unit band
  SpectralEfficiencyTable table = build_efficiency_table(deployment, radio, psd);
  SolveReport solved = solve(table, traffic, options);
  report.final_status = solved.status;
  report.final_psd = psd;
  if (solved.status == SolveStatus::infeasible) return report;
  report.steps.push_back({0, Phase::spectrum_update, solved.objective_value, solved.partition, psd});

  SpectrumPartition current = solved.partition;
  for (std::size_t round = 1; round <= max_iters; ++round) {
    psd = update_psd(current, budget);
    table = build_efficiency_table(deployment, radio, psd);
    double value = std::numeric_limits<double>::infinity();
    try {
      value = objective(current, table, traffic, options.stability_margin);
    } catch (const InstabilityError&) {
    }
    report.steps.push_back({round, Phase::psd_update, value, current, psd});
    report.final_psd = psd;

    solved = solve(table, traffic, options);
    report.final_status = solved.status;
    if (solved.status == SolveStatus::infeasible) break;
    report.steps.push_back({round, Phase::spectrum_update, solved.objective_value, solved.partition, psd});
    report.rounds = round;
    const double moved = solved.partition.l1_distance(current);
    current = solved.partition;
    if (moved < tol) {
      report.converged = true;
      break;
    }
  }
  return report;
}

}  // namespace hetspec
