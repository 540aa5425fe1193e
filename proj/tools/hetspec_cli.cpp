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

// hetspec: scenario generation, spectrum partition solves, load sweeps,
// queue simulation and power-control iteration from one JSON config plus
// flag overrides.
//
// Exit codes: 0 success, 1 config error, 2 infeasible everywhere,
// 3 internal numeric failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hetspec/error.hpp"
#include "hetspec/serialize.hpp"

namespace {

using nlohmann::json;
using namespace hetspec;

constexpr int kExitConfig = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNumeric = 3;

struct Overrides {
  std::string config_path;
  std::string scenario_path;
  std::optional<std::string> area;
  std::optional<double> spacing;
  std::optional<std::size_t> num_bts;
  std::optional<std::uint64_t> seed;
  std::optional<double> pathloss_exp;
  std::optional<double> tx_psd;
  std::optional<double> noise_psd;
  std::optional<std::string> log_base;
  std::optional<double> load;
  std::optional<std::string> output;
  std::optional<std::string> scheme;
  std::optional<double> horizon;
  std::optional<std::size_t> replications;
  std::optional<std::uint64_t> sim_seed;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config_path, "JSON experiment config");
  cmd->add_option("--scenario", o.scenario_path, "replay a deployment written by 'gen'");
  cmd->add_option("--area", o.area, "area in meters: W or WxH");
  cmd->add_option("--spacing", o.spacing, "distance between adjacent hexagon centers (m)");
  cmd->add_option("--num-bts", o.num_bts, "number of BTS's (1..16)");
  cmd->add_option("--seed", o.seed, "BTS drop seed");
  cmd->add_option("--pathloss-exp", o.pathloss_exp, "path-loss exponent");
  cmd->add_option("--tx-psd", o.tx_psd, "transmit PSD (W/Hz)");
  cmd->add_option("--noise-psd", o.noise_psd, "noise PSD (W/Hz)");
  cmd->add_option("--log-base", o.log_base, "natural | base2");
  cmd->add_option("-o,--output", o.output, "output file (default stdout)");
}

void add_traffic(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--load", o.load, "average packet arrival rate");
  cmd->add_option("--scheme", o.scheme, "optimal | orthogonal | full-reuse");
}

void add_sim(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--horizon", o.horizon, "simulated time per replication");
  cmd->add_option("--replications", o.replications, "independent replications");
  cmd->add_option("--sim-seed", o.sim_seed, "master simulation seed");
}

ExperimentConfig load_config(const Overrides& o) {
  ExperimentConfig cfg;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw ConfigError("cannot open config " + o.config_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    j.get_to(cfg);
  }
  if (o.area) {
    const auto x = o.area->find('x');
    cfg.topology.area_width_m = std::stod(o.area->substr(0, x));
    cfg.topology.area_height_m = x == std::string::npos ? cfg.topology.area_width_m : std::stod(o.area->substr(x + 1));
  }
  if (o.spacing) cfg.topology.spacing_m = *o.spacing;
  if (o.num_bts) cfg.topology.num_bts = *o.num_bts;
  if (o.seed) cfg.topology.seed = *o.seed;
  if (o.pathloss_exp) cfg.radio.pathloss_exponent = *o.pathloss_exp;
  if (o.tx_psd) cfg.radio.tx_psd = *o.tx_psd;
  if (o.noise_psd) cfg.radio.noise_psd = *o.noise_psd;
  if (o.log_base) {
    json radio = cfg.radio;
    radio["log_base"] = *o.log_base;
    radio.get_to(cfg.radio);
  }
  if (o.load) cfg.load = *o.load;
  if (o.output) cfg.output = *o.output;
  if (o.horizon) cfg.sim.horizon = *o.horizon;
  if (o.replications) cfg.sim.replications = *o.replications;
  if (o.sim_seed) cfg.sim.seed = *o.sim_seed;
  cfg.validate();
  return cfg;
}

Scenario load_scenario(const ExperimentConfig& cfg, const Overrides& o) {
  if (o.scenario_path.empty()) return build_scenario(cfg.topology, cfg.radio);
  std::ifstream in(o.scenario_path);
  if (!in) throw ConfigError("cannot open scenario " + o.scenario_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  Scenario s;
  j.at("deployment").get_to(s.deployment);
  if (!s.deployment.is_associated()) s.deployment = associate(std::move(s.deployment));
  s.table = build_efficiency_table(s.deployment, cfg.radio);
  s.seed_used = j.value("seed_used", std::uint64_t{0});
  return s;
}

void emit(const ExperimentConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw ConfigError("cannot write " + cfg.output);
  out << text;
}

Scheme chosen_scheme(const Overrides& o) { return o.scheme ? scheme_from_string(*o.scheme) : Scheme::optimal; }

int run_gen(const Overrides& o) {
  const ExperimentConfig cfg = load_config(o);
  const Scenario s = load_scenario(cfg, o);
  const json out{{"config", cfg}, {"seed_used", s.seed_used}, {"deployment", s.deployment}, {"table", s.table}};
  emit(cfg, out.dump(2) + "\n");
  return 0;
}

int run_solve(const Overrides& o) {
  const ExperimentConfig cfg = load_config(o);
  const Scenario s = load_scenario(cfg, o);
  const TrafficProfile traffic = make_traffic(cfg, s.deployment, cfg.load);
  const SolveReport report = solve_scheme(chosen_scheme(o), s.table, traffic, cfg.solver);
  emit(cfg, json{{"load", cfg.load}, {"traffic", traffic}, {"report", report}}.dump(2) + "\n");
  return report.status == SolveStatus::infeasible ? kExitInfeasible : 0;
}

int run_sweep_cmd(const Overrides& o, const std::string& reports_path) {
  const ExperimentConfig cfg = load_config(o);
  if (cfg.sweep.empty()) throw ConfigError("sweep grid is empty");
  const Scenario s = load_scenario(cfg, o);
  const std::vector<SweepRow> rows = run_sweep(cfg, s);
  emit(cfg, sweep_csv(rows));
  if (!reports_path.empty()) {
    json dump = json::array();
    for (double load : cfg.sweep) {
      const TrafficProfile traffic = make_traffic(cfg, s.deployment, load);
      for (Scheme scheme : cfg.schemes) {
        dump.push_back({{"load", load}, {"scheme", to_string(scheme)},
                        {"report", solve_scheme(scheme, s.table, traffic, cfg.solver)}});
      }
    }
    std::ofstream out(reports_path);
    if (!out) throw ConfigError("cannot write " + reports_path);
    out << dump.dump(2) << '\n';
  }
  bool any_feasible = false;
  for (const SweepRow& r : rows) any_feasible = any_feasible || r.status != "infeasible";
  return any_feasible ? 0 : kExitInfeasible;
}

int run_simulate(const Overrides& o) {
  const ExperimentConfig cfg = load_config(o);
  const Scenario s = load_scenario(cfg, o);
  const TrafficProfile traffic = make_traffic(cfg, s.deployment, cfg.load);
  const SolveReport report = solve_scheme(chosen_scheme(o), s.table, traffic, cfg.solver);
  if (report.status == SolveStatus::infeasible) {
    emit(cfg, json{{"load", cfg.load}, {"report", report}}.dump(2) + "\n");
    return kExitInfeasible;
  }
  const BoundComparison cmp = compare_bound(s.table, report.partition, traffic, cfg.sim);
  emit(cfg, json{{"load", cfg.load},
                 {"scheme", to_string(chosen_scheme(o))},
                 {"analytic", cmp.analytic},
                 {"simulated", cmp.simulated},
                 {"partition", report.partition}}
                    .dump(2) +
                "\n");
  return 0;
}

int run_partition(const Overrides& o) {
  const ExperimentConfig cfg = load_config(o);
  const Scenario s = load_scenario(cfg, o);
  const TrafficProfile traffic = make_traffic(cfg, s.deployment, cfg.load);
  const SolveReport report = solve_scheme(chosen_scheme(o), s.table, traffic, cfg.solver);
  if (report.status == SolveStatus::infeasible) {
    emit(cfg, "infeasible at load " + format_g9(cfg.load) + "\n");
    return kExitInfeasible;
  }
  std::ostringstream out;
  out << "load " << format_g9(cfg.load) << ", objective " << format_g9(report.objective_value) << ", "
      << report.support_size << " segment(s)\n"
      << show_partition(report.partition);
  emit(cfg, out.str());
  return 0;
}

int run_power(const Overrides& o, const std::string& json_path) {
  const ExperimentConfig cfg = load_config(o);
  const Scenario s = load_scenario(cfg, o);
  const TrafficProfile traffic = make_traffic(cfg, s.deployment, cfg.load);
  const PowerBudget budget{std::vector<double>(s.deployment.num_bts(), cfg.power.max_power)};
  const PowerIterationReport report =
      alternate(s.deployment, cfg.radio, budget, traffic, cfg.power.tol, cfg.power.max_iters, cfg.solver);
  emit(cfg, power_csv(report));
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw ConfigError("cannot write " + json_path);
    out << json(report).dump(2) << '\n';
  }
  return report.steps.empty() ? kExitInfeasible : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delay-minimizing spectrum partitions for K-cell HetNets"};
  app.require_subcommand(1);

  Overrides gen_o, solve_o, sweep_o, sim_o, part_o, power_o;
  std::string reports_path;
  std::string power_json;

  auto* gen = app.add_subcommand("gen", "generate a topology and its efficiency table");
  add_common(gen, gen_o);
  auto* solve_cmd = app.add_subcommand("solve", "solve for one load");
  add_common(solve_cmd, solve_o);
  add_traffic(solve_cmd, solve_o);
  auto* sweep = app.add_subcommand("sweep", "sweep loads and schemes, emit CSV");
  add_common(sweep, sweep_o);
  add_sim(sweep, sweep_o);
  sweep->add_option("--reports", reports_path, "also dump every solve report as JSON");
  auto* sim = app.add_subcommand("simulate", "compare the delay bound with simulation");
  add_common(sim, sim_o);
  add_traffic(sim, sim_o);
  add_sim(sim, sim_o);
  auto* part = app.add_subcommand("partition", "render the optimal partition");
  add_common(part, part_o);
  add_traffic(part, part_o);
  auto* power = app.add_subcommand("power", "alternate spectrum and PSD updates");
  add_common(power, power_o);
  power->add_option("--load", power_o.load, "average packet arrival rate");
  power->add_option("--json", power_json, "also dump the full report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*gen) return run_gen(gen_o);
    if (*solve_cmd) return run_solve(solve_o);
    if (*sweep) return run_sweep_cmd(sweep_o, reports_path);
    if (*sim) return run_simulate(sim_o);
    if (*part) return run_partition(part_o);
    if (*power) return run_power(power_o, power_json);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DimensionError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitConfig;
}
