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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("hetspec_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = std::string(HETSPEC_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                          (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("gen writes a replayable scenario") {
  const Run r = run("gen --num-bts 4 --seed 3");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"deployment\"") != std::string::npos);
  CHECK(r.out.find("\"table\"") != std::string::npos);

  const fs::path scen = scratch() / "scenario.json";
  write(scen, r.out);
  const Run direct = run("solve --num-bts 4 --seed 3 --load 0.5");
  const Run replay = run("solve --num-bts 4 --scenario " + scen.string() + " --load 0.5");
  REQUIRE(direct.code == 0);
  REQUIRE(replay.code == 0);
  CHECK(direct.out == replay.out);
}

TEST_CASE("solve exit codes") {
  CHECK(run("solve --load 0.5").code == 0);
  CHECK(run("solve --load 50").code == 2);
  CHECK(run("solve --load 1.2 --scheme orthogonal").code == 2);
  CHECK(run("solve --load 1.2 --scheme optimal").code == 0);
  CHECK(run("solve --scheme best").code == 1);
  CHECK(run("solve --num-bts 17").code == 1);
  CHECK(run("solve --log-base ten").code == 1);
  CHECK(run("solve --no-such-flag").code == 1);
  CHECK(run("").code == 1);
}

TEST_CASE("config file plus flag overrides") {
  const fs::path cfg = scratch() / "config.json";
  write(cfg, R"({"topology": {"num_bts": 3, "seed": 2}, "load": 0.4, "schemes": ["optimal", "full-reuse"],
               "sweep": [0.2, 0.4], "sim": {"horizon": 1000, "replications": 2}})");
  const Run from_file = run("solve -c " + cfg.string());
  const Run from_flags = run("solve --num-bts 3 --seed 2 --load 0.4");
  REQUIRE(from_file.code == 0);
  CHECK(from_file.out == from_flags.out);
  CHECK(run("solve -c " + cfg.string() + " --load 0.6").out != from_file.out);

  const fs::path bad = scratch() / "bad.json";
  write(bad, "{ not json");
  CHECK(run("solve -c " + bad.string()).code == 1);
  CHECK(run("solve -c " + (scratch() / "missing.json").string()).code == 1);
  write(bad, R"({"sweep": [0.5, 0.2]})");
  CHECK(run("sweep -c " + bad.string()).code == 1);
}

TEST_CASE("sweep CSV is byte-identical across runs") {
  const std::string args = "sweep --num-bts 3 --horizon 2000 --replications 2 -c ";
  const fs::path cfg = scratch() / "sweep.json";
  write(cfg, R"({"sweep": [0.2, 0.6]})");
  const fs::path a = scratch() / "a.csv";
  const fs::path b = scratch() / "b.csv";
  REQUIRE(run(args + cfg.string() + " -o " + a.string()).code == 0);
  REQUIRE(run(args + cfg.string() + " -o " + b.string()).code == 0);
  const std::string csv = slurp(a);
  CHECK(csv == slurp(b));
  CHECK(csv.rfind("load,scheme,analytic_delay,simulated_delay,ci95,support_size,status\n", 0) == 0);

  write(cfg, R"({"sweep": [40, 50]})");
  CHECK(run(args + cfg.string()).code == 2);
}

TEST_CASE("simulate, partition and power") {
  const Run sim = run("simulate --num-bts 2 --load 0.5 --horizon 2000 --replications 2");
  REQUIRE(sim.code == 0);
  CHECK(sim.out.find("\"analytic\"") != std::string::npos);

  const Run part = run("partition --num-bts 1 --load 0.5");
  REQUIRE(part.code == 0);
  CHECK(part.out.find("1 segment(s)") != std::string::npos);
  CHECK(part.out.find("BTS 1    ########") != std::string::npos);

  const Run power = run("power --num-bts 3 --load 0.5");
  REQUIRE(power.code == 0);
  CHECK(power.out.rfind("iteration,phase,objective,support_size,psd\n", 0) == 0);
  CHECK(power.out.find("\nconverged,") != std::string::npos);
}
