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

#include "hetspec/serialize.hpp"

#include <cmath>

#include "hetspec/error.hpp"

namespace hetspec {

using nlohmann::json;

namespace {

// JSON has no infinity; write null and read it back as +inf.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string_view to_string(LogBase b) { return b == LogBase::base2 ? "base2" : "natural"; }

LogBase log_base_from(const std::string& s) {
  if (s == "natural") return LogBase::natural;
  if (s == "base2") return LogBase::base2;
  throw ConfigError("log_base must be 'natural' or 'base2'");
}

template <class T>
void read_if(const json& j, const char* key, T& out) {
  if (j.contains(key)) j.at(key).get_to(out);
}

}  // namespace

void to_json(json& j, const Point& p) { j = json::array({p.x_m, p.y_m}); }
void from_json(const json& j, Point& p) {
  p.x_m = j.at(0).get<double>();
  p.y_m = j.at(1).get<double>();
}

void to_json(json& j, const HexGrid& g) {
  json cells = json::array();
  for (const HexCell& c : g.cells) cells.push_back({c.id, c.center.x_m, c.center.y_m});
  json vertices = json::array();
  for (const HexVertex& v : g.vertices) vertices.push_back({v.id, v.pos.x_m, v.pos.y_m});
  j = json{{"area_width_m", g.area_width_m},
           {"area_height_m", g.area_height_m},
           {"center_spacing_m", g.center_spacing_m},
           {"cells", cells},
           {"vertices", vertices}};
}

void from_json(const json& j, HexGrid& g) {
  g.area_width_m = j.at("area_width_m").get<double>();
  g.area_height_m = j.at("area_height_m").get<double>();
  g.center_spacing_m = j.at("center_spacing_m").get<double>();
  g.cells.clear();
  for (const json& c : j.at("cells")) {
    g.cells.push_back({c.at(0).get<std::size_t>(), Point{c.at(1).get<double>(), c.at(2).get<double>()}});
  }
  g.vertices.clear();
  for (const json& v : j.at("vertices")) {
    g.vertices.push_back({v.at(0).get<std::size_t>(), Point{v.at(1).get<double>(), v.at(2).get<double>()}});
  }
}

void to_json(json& j, const Deployment& d) {
  json bts = json::array();
  for (std::size_t i = 0; i < d.num_bts(); ++i) {
    bts.push_back({{"bts", i}, {"vertex", d.bts_vertices.at(i)}, {"x_m", d.bts_positions[i].x_m},
                   {"y_m", d.bts_positions[i].y_m}});
  }
  json assoc = json::array();
  for (std::size_t c = 0; c < d.association.size(); ++c) {
    json shares = json::array();
    for (const CellShare& s : d.association[c]) shares.push_back({s.bts, s.weight});
    assoc.push_back({{"cell", c}, {"shares", shares}});
  }
  j = json{{"grid", d.grid}, {"bts", bts}, {"association", assoc}};
}

void from_json(const json& j, Deployment& d) {
  d = Deployment{};
  j.at("grid").get_to(d.grid);
  for (const json& b : j.at("bts")) {
    d.bts_vertices.push_back(b.at("vertex").get<std::size_t>());
    d.bts_positions.push_back({b.at("x_m").get<double>(), b.at("y_m").get<double>()});
  }
  if (j.contains("association")) {
    d.association.assign(j.at("association").size(), {});
    for (const json& a : j.at("association")) {
      const auto cell = a.at("cell").get<std::size_t>();
      for (const json& s : a.at("shares")) {
        d.association.at(cell).push_back({s.at(0).get<std::size_t>(), s.at(1).get<double>()});
      }
    }
  }
}

void to_json(json& j, const RadioParams& r) {
  j = json{{"tx_psd", r.tx_psd},
           {"noise_psd", r.noise_psd},
           {"pathloss_exponent", r.pathloss_exponent},
           {"log_base", to_string(r.log_base)},
           {"min_distance_m", r.min_distance_m}};
}

void from_json(const json& j, RadioParams& r) {
  read_if(j, "tx_psd", r.tx_psd);
  read_if(j, "noise_psd", r.noise_psd);
  read_if(j, "pathloss_exponent", r.pathloss_exponent);
  read_if(j, "min_distance_m", r.min_distance_m);
  if (j.contains("log_base")) r.log_base = log_base_from(j.at("log_base").get<std::string>());
}

void to_json(json& j, const SpectralEfficiencyTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.k(); ++i) {
    const auto row = t.row(i);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  j = json{{"k", t.k()}, {"s", rows}};
}

void from_json(const json& j, SpectralEfficiencyTable& t) {
  const auto k = j.at("k").get<std::size_t>();
  t = SpectralEfficiencyTable(k);
  const json& rows = j.at("s");
  if (rows.size() != k) throw DimensionError("table must have K rows");
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = rows.at(i).get<std::vector<double>>();
    if (row.size() != t.subsets()) throw DimensionError("table rows must have 2^K entries");
    std::copy(row.begin(), row.end(), t.row(i).begin());
  }
}

void to_json(json& j, const SpectrumPartition& p) {
  json entries = json::array();
  for (const auto& [b, v] : p.entries()) entries.push_back({{"subset", b.mask()}, {"x", v}});
  j = json{{"k", p.k()}, {"entries", entries}};
}

void from_json(const json& j, SpectrumPartition& p) {
  p = SpectrumPartition(j.at("k").get<std::size_t>());
  for (const json& e : j.at("entries")) p.set(BtsSubset{e.at("subset").get<std::uint32_t>()}, e.at("x").get<double>());
}

void to_json(json& j, const TrafficProfile& t) { j = json{{"lambda", t.lambda}}; }
void from_json(const json& j, TrafficProfile& t) { j.at("lambda").get_to(t.lambda); }

void to_json(json& j, const SolveReport& r) {
  json support = json::array();
  for (BtsSubset b : r.partition.support()) support.push_back({{"subset", b.mask()}, {"label", b.to_string()}});
  json trace = json::array();
  for (double v : r.objective_trace) trace.push_back(number_or_null(v));
  j = json{{"status", to_string(r.status)},
           {"objective", number_or_null(r.objective_value)},
           {"iterations", r.iterations},
           {"objective_trace", trace},
           {"candidate_sizes", r.candidate_sizes},
           {"support_size", r.support_size},
           {"support", support},
           {"rates", r.rates},
           {"feasibility_margin", number_or_null(r.feasibility_margin)},
           {"partition", r.partition}};
}

void to_json(json& j, const SimulationStats& s) {
  const auto arr = [](const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(number_or_null(x));
    return a;
  };
  j = json{{"aggregate_sojourn", number_or_null(s.aggregate_sojourn)},
           {"aggregate_ci95", number_or_null(s.aggregate_ci95)},
           {"sojourn", arr(s.sojourn)},
           {"sojourn_ci95", arr(s.sojourn_ci95)},
           {"queue_length", arr(s.queue_length)},
           {"queue_length_ci95", arr(s.queue_length_ci95)},
           {"active_fraction", arr(s.active_fraction)},
           {"tally_sojourn", arr(s.tally_sojourn)},
           {"tally_aggregate_sojourn", number_or_null(s.tally_aggregate_sojourn)},
           {"tally_aggregate_ci95", number_or_null(s.tally_aggregate_ci95)},
           {"packets", s.packets},
           {"replications", s.replications},
           {"diverging", s.diverging}};
}

void to_json(json& j, const PowerIterationReport& r) {
  json steps = json::array();
  for (const PowerIterationStep& s : r.steps) {
    steps.push_back({{"iteration", s.iteration},
                     {"phase", to_string(s.phase)},
                     {"objective", number_or_null(s.objective)},
                     {"psd", s.psd},
                     {"partition", s.partition}});
  }
  j = json{{"steps", steps},
           {"converged", r.converged},
           {"rounds", r.rounds},
           {"final_psd", r.final_psd},
           {"final_status", to_string(r.final_status)}};
}

void to_json(json& j, const SimConfig& c) {
  j = json{{"horizon", c.horizon},
           {"warmup", c.warmup},
           {"seed", c.seed},
           {"replications", c.replications},
           {"divergence_cap", c.divergence_cap}};
}

void from_json(const json& j, SimConfig& c) {
  read_if(j, "horizon", c.horizon);
  read_if(j, "warmup", c.warmup);
  read_if(j, "seed", c.seed);
  read_if(j, "replications", c.replications);
  read_if(j, "divergence_cap", c.divergence_cap);
}

void to_json(json& j, const ExperimentConfig& c) {
  json schemes = json::array();
  for (Scheme s : c.schemes) schemes.push_back(to_string(s));
  j = json{{"topology",
            {{"area_width_m", c.topology.area_width_m},
             {"area_height_m", c.topology.area_height_m},
             {"spacing_m", c.topology.spacing_m},
             {"num_bts", c.topology.num_bts},
             {"seed", c.topology.seed},
             {"max_seed_retries", c.topology.max_seed_retries}}},
           {"radio", c.radio},
           {"traffic_model", c.traffic_model == TrafficModel::uniform ? "uniform" : "proportional"},
           {"load_axis", c.load_axis == LoadAxis::per_bts ? "per-bts" : "network-total"},
           {"sweep", c.sweep},
           {"schemes", schemes},
           {"load", c.load},
           {"sim", c.sim},
           {"solver",
            {{"tol", c.solver.tol},
             {"max_outer_iters", c.solver.max_outer_iters},
             {"max_inner_iters", c.solver.max_inner_iters},
             {"stability_margin", c.solver.stability_margin}}},
           {"power", {{"max_power", c.power.max_power}, {"tol", c.power.tol}, {"max_iters", c.power.max_iters}}},
           {"output", c.output}};
}

void from_json(const json& j, ExperimentConfig& c) {
  if (j.contains("topology")) {
    const json& t = j.at("topology");
    read_if(t, "area_width_m", c.topology.area_width_m);
    read_if(t, "area_height_m", c.topology.area_height_m);
    read_if(t, "spacing_m", c.topology.spacing_m);
    read_if(t, "num_bts", c.topology.num_bts);
    read_if(t, "seed", c.topology.seed);
    read_if(t, "max_seed_retries", c.topology.max_seed_retries);
  }
  if (j.contains("radio")) j.at("radio").get_to(c.radio);
  if (j.contains("traffic_model")) {
    const auto s = j.at("traffic_model").get<std::string>();
    if (s == "uniform") c.traffic_model = TrafficModel::uniform;
    else if (s == "proportional") c.traffic_model = TrafficModel::proportional;
    else throw ConfigError("traffic_model must be 'uniform' or 'proportional'");
  }
  if (j.contains("load_axis")) {
    const auto s = j.at("load_axis").get<std::string>();
    if (s == "per-bts") c.load_axis = LoadAxis::per_bts;
    else if (s == "network-total") c.load_axis = LoadAxis::network_total;
    else throw ConfigError("load_axis must be 'per-bts' or 'network-total'");
  }
  read_if(j, "sweep", c.sweep);
  if (j.contains("schemes")) {
    c.schemes.clear();
    for (const json& s : j.at("schemes")) c.schemes.push_back(scheme_from_string(s.get<std::string>()));
  }
  read_if(j, "load", c.load);
  if (j.contains("sim")) j.at("sim").get_to(c.sim);
  if (j.contains("solver")) {
    const json& s = j.at("solver");
    read_if(s, "tol", c.solver.tol);
    read_if(s, "max_outer_iters", c.solver.max_outer_iters);
    read_if(s, "max_inner_iters", c.solver.max_inner_iters);
    read_if(s, "stability_margin", c.solver.stability_margin);
  }
  if (j.contains("power")) {
    const json& p = j.at("power");
    read_if(p, "max_power", c.power.max_power);
    read_if(p, "tol", c.power.tol);
    read_if(p, "max_iters", c.power.max_iters);
  }
  read_if(j, "output", c.output);
}

}  // namespace hetspec
