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

// JSON forms of scenario, table, partition and report types. Subsets are
// written as bitmasks (bit i = BTS i+1) and BTS ids are 0-based; partitions
// are emitted sorted by bitmask.

#include "json.hpp"

#include "hetspec/experiments.hpp"

namespace hetspec {

void to_json(nlohmann::json& j, const Point& p);
void from_json(const nlohmann::json& j, Point& p);
void to_json(nlohmann::json& j, const HexGrid& g);
void from_json(const nlohmann::json& j, HexGrid& g);
void to_json(nlohmann::json& j, const Deployment& d);
void from_json(const nlohmann::json& j, Deployment& d);
void to_json(nlohmann::json& j, const RadioParams& r);
void from_json(const nlohmann::json& j, RadioParams& r);
void to_json(nlohmann::json& j, const SpectralEfficiencyTable& t);
void from_json(const nlohmann::json& j, SpectralEfficiencyTable& t);
void to_json(nlohmann::json& j, const SpectrumPartition& p);
void from_json(const nlohmann::json& j, SpectrumPartition& p);
void to_json(nlohmann::json& j, const TrafficProfile& t);
void from_json(const nlohmann::json& j, TrafficProfile& t);
void to_json(nlohmann::json& j, const SolveReport& r);
void to_json(nlohmann::json& j, const SimulationStats& s);
void to_json(nlohmann::json& j, const PowerIterationReport& r);
void to_json(nlohmann::json& j, const SimConfig& c);
void from_json(const nlohmann::json& j, SimConfig& c);
void to_json(nlohmann::json& j, const ExperimentConfig& c);
/// Missing keys keep their defaults.
void from_json(const nlohmann::json& j, ExperimentConfig& c);

}  // namespace hetspec
