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

// Alternating spectrum / PSD updates under a total power budget per BTS:
// solve with the current efficiency table, then let each BTS spread its
// budget uniformly over the band it holds and rebuild the table.

#include <cstddef>
#include <string_view>
#include <vector>

#include "hetspec/optimizer.hpp"
#include "hetspec/topology.hpp"

namespace hetspec {

struct PowerBudget {
  std::vector<double> max_power;  // P_i^max per BTS

  void validate() const;
};

enum class Phase { spectrum_update, psd_update };

std::string_view to_string(Phase p);

struct PowerIterationStep {
  std::size_t iteration = 0;
  Phase phase = Phase::spectrum_update;
  double objective = 0.0;  // +inf when the phase left some queue unstable
  SpectrumPartition partition;
  std::vector<double> psd;
};

struct PowerIterationReport {
  std::vector<PowerIterationStep> steps;
  bool converged = false;
  std::size_t rounds = 0;
  std::vector<double> final_psd;
  SolveStatus final_status = SolveStatus::optimal;
};

/// p_i = P_i^max / b_i with b_i the total bandwidth BTS i transmits on.
std::vector<double> update_psd(const SpectrumPartition& partition, const PowerBudget& budget);

/// Starts from p_i = P_i^max over the whole band. Each round is a PSD update
/// followed by a spectrum update; stops once the partition moves less than
/// `tol` in L1 or after `max_iters` rounds.
PowerIterationReport alternate(const Deployment& deployment, const RadioParams& radio, const PowerBudget& budget,
                               const TrafficProfile& traffic, double tol = 1e-4, std::size_t max_iters = 20,
                               const SolverOptions& options = {});

}  // namespace hetspec
