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

// Delay-minimizing spectrum partition. The full problem ranges over all
// 2^K - 1 sharing combinations; the solver works on a growing candidate set
// of combinations, minimizing exactly over the candidate face and then
// admitting the K combinations with the most negative partial derivatives
// until the set stops growing.

#include <cstddef>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "hetspec/spectrum_model.hpp"

namespace hetspec {

using CandidateSet = std::set<BtsSubset>;

enum class SolveStatus { optimal, infeasible, max_iterations };

std::string_view to_string(SolveStatus s);

struct SolverOptions {
  double tol = 1e-8;                 // objective decrease / Newton decrement
  std::size_t max_outer_iters = 50;  // candidate-set expansions
  std::size_t max_inner_iters = 10000;
  double stability_margin = kStabilityMargin;
};

struct SolveReport {
  SpectrumPartition partition;
  RateVector rates;
  double objective_value = 0.0;
  std::size_t iterations = 0;
  std::vector<double> objective_trace;       // starting point, then one entry per restricted solve
  std::vector<std::size_t> candidate_sizes;  // |N| before each restricted solve
  std::size_t support_size = 0;
  SolveStatus status = SolveStatus::infeasible;
  /// Max-min stability slack of the phase-one point (when it was used).
  double feasibility_margin = 0.0;
};

struct FeasibilityResult {
  bool feasible = false;
  double margin = 0.0;  // t* = max_x min_i (r_i - lambda_i)
  SpectrumPartition partition;
};

/// Phase-one LP: maximize t subject to sum_B s_i(B) x(B) - lambda_i >= t,
/// sum x = 1, x >= 0, over `columns` (all non-empty subsets when empty).
/// Returns a basic solution, so at most K+1 entries are non-zero. Feasible
/// means t* > margin.
FeasibilityResult find_feasible(const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                                std::span<const BtsSubset> columns = {},
                                double margin = kStabilityMargin);

struct RestrictedResult {
  SpectrumPartition partition;
  double objective = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Minimizes the objective over {x >= 0, sum x = 1, x(B) = 0 for B outside
/// `candidate`} starting from the feasible point x0. Never returns a point
/// worse than x0. The returned support is affinely independent in rate space.
RestrictedResult solve_restricted(const CandidateSet& candidate, const SpectrumPartition& x0,
                                  const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                                  const SolverOptions& options = {});

SolveReport solve(const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                  const SolverOptions& options = {});

/// Best allocation using singleton segments only.
SolveReport solve_orthogonal_baseline(const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                                      const SolverOptions& options = {});

/// Evaluates x(S) = 1.
SolveReport full_reuse_baseline(const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                                double margin = kStabilityMargin);

/// Drops entries of `partition` while keeping r = sum_B s(B) x(B) fixed,
/// until the supporting vectors (s(B), 1) are linearly independent.
SpectrumPartition caratheodory_reduce(const SpectrumPartition& partition, const SpectralEfficiencyTable& table);

/// max over supported B of grad_B minus min over all B of grad_B. Zero at a
/// global optimum (first-order condition on the simplex).
double stationarity_gap(const SpectrumPartition& partition, const SpectralEfficiencyTable& table,
                        const TrafficProfile& traffic);

}  // namespace hetspec
