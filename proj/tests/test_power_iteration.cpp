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

#include <cmath>

#include "doctest.h"
#include "hetspec/error.hpp"
#include "hetspec/power_iteration.hpp"

using namespace hetspec;

namespace {

Deployment far_apart() {
  Deployment d;
  d.grid.area_width_m = 20000;
  d.grid.area_height_m = 100;
  d.grid.center_spacing_m = 20;
  d.grid.cells = {{0, {20, 0}}, {1, {10020, 0}}};
  d.grid.vertices = {{0, {0, 0}}, {1, {10000, 0}}};
  d.bts_positions = {{0, 0}, {10000, 0}};
  d.bts_vertices = {0, 1};
  return associate(d);
}

Deployment seven_bts() { return associate(place_bts(generate_hex_grid(100, 100, 20), 7, 1)); }

void check_conservation(const PowerIterationReport& r, const PowerBudget& budget) {
  for (std::size_t n = 0; n < r.steps.size(); ++n) {
    const PowerIterationStep& s = r.steps[n];
    // A PSD update spreads the budget over the band of the partition it
    // responded to; a spectrum update keeps the PSD and changes the band.
    if (s.phase != Phase::psd_update) continue;
    const std::vector<double> band = s.partition.bandwidth_per_bts();
    for (std::size_t i = 0; i < band.size(); ++i) CHECK(std::abs(s.psd[i] * band[i] - budget.max_power[i]) <= 1e-12);
    if (n + 1 < r.steps.size()) CHECK(r.steps[n + 1].psd == s.psd);
  }
}

}  // namespace

TEST_CASE("PSD update examples") {
  const PowerBudget unit{{1.0, 1.0, 1.0}};
  for (double p : update_psd(SpectrumPartition::full_reuse(3), unit)) CHECK(p == 1.0);
  for (double p : update_psd(SpectrumPartition::orthogonal(3), unit)) CHECK(p == doctest::Approx(3.0).epsilon(1e-15));

  SpectrumPartition x(2);
  x.set(BtsSubset{1}, 0.25);
  x.set(BtsSubset{3}, 0.25);
  x.set(BtsSubset{2}, 0.5);
  const std::vector<double> p = update_psd(x, PowerBudget{{1.0, 2.0}});
  CHECK(p[0] == 2.0);
  CHECK(p[1] == doctest::Approx(2.0 / 0.75).epsilon(1e-15));
}

TEST_CASE("PSD update errors") {
  SpectrumPartition x(2);
  x.set(BtsSubset{1}, 1.0);
  try {
    update_psd(x, PowerBudget{{1.0, 1.0}});
    FAIL("expected zero-bandwidth error");
  } catch (const ZeroBandwidthError& e) {
    CHECK(e.bts() == 1);
  }
  CHECK_THROWS_AS(update_psd(x, PowerBudget{{1.0}}), DimensionError);
  CHECK_THROWS_AS(update_psd(x, PowerBudget{{1.0, 0.0}}), ConfigError);
}

TEST_CASE("zero rounds keeps only the initial solve") {
  const Deployment d = seven_bts();
  const PowerIterationReport r =
      alternate(d, RadioParams{}, PowerBudget{std::vector<double>(7, 1.0)}, TrafficProfile{std::vector<double>(7, 0.5)},
                1e-4, 0);
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].phase == Phase::spectrum_update);
  CHECK(r.rounds == 0);
  CHECK_FALSE(r.converged);
  CHECK(r.final_psd == std::vector<double>(7, 1.0));
}

TEST_CASE("interference-free deployment reaches a fixed point at once") {
  const PowerBudget budget{{1.0, 1.0}};
  const PowerIterationReport r = alternate(far_apart(), RadioParams{}, budget, TrafficProfile{{2.0, 3.0}});
  CHECK(r.converged);
  CHECK(r.rounds <= 2);
  check_conservation(r, budget);
}

TEST_CASE("seven-BTS heavy load: alternation, trace length and conservation") {
  const PowerBudget budget{std::vector<double>(7, 1.0)};
  const PowerIterationReport r = alternate(seven_bts(), RadioParams{}, budget,
                                           TrafficProfile{std::vector<double>(7, 1.0)});
  REQUIRE(r.steps.size() == 1 + 2 * r.rounds);
  for (std::size_t n = 0; n < r.steps.size(); ++n) {
    CHECK(r.steps[n].phase == (n % 2 == 0 ? Phase::spectrum_update : Phase::psd_update));
    CHECK(r.steps[n].iteration == (n + 1) / 2);
  }
  check_conservation(r, budget);
  REQUIRE(r.steps.size() >= 3);
  CHECK(r.steps[2].objective < r.steps[0].objective);
  CHECK(r.final_psd == r.steps.back().psd);
}

TEST_CASE("infeasible start stops with an empty trace") {
  const PowerIterationReport r = alternate(seven_bts(), RadioParams{}, PowerBudget{std::vector<double>(7, 1.0)},
                                           TrafficProfile{std::vector<double>(7, 50.0)});
  CHECK(r.steps.empty());
  CHECK(r.final_status == SolveStatus::infeasible);
  CHECK_FALSE(r.converged);
}

TEST_CASE("power iteration argument checks") {
  CHECK_THROWS_AS(alternate(seven_bts(), RadioParams{}, PowerBudget{{1.0}}, TrafficProfile{std::vector<double>(7, 0.5)}),
                  DimensionError);
  CHECK(to_string(Phase::psd_update) == "psd-update");
}
