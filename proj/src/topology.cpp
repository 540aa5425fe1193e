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

#include "hetspec/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <utility>

#include "hetspec/error.hpp"
#include "hetspec/kernels.hpp"

namespace hetspec {
namespace {

// Vertices from neighbouring hexagons coincide up to rounding; merge them on
// a 1 nm lattice.
std::pair<long long, long long> lattice_key(Point p) {
  return {std::llround(p.x_m * 1e9), std::llround(p.y_m * 1e9)};
}

bool inside(Point p, double w, double h) {
  constexpr double eps = 1e-9;
  return p.x_m >= -eps && p.x_m <= w + eps && p.y_m >= -eps && p.y_m <= h + eps;
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x_m - b.x_m, a.y_m - b.y_m); }

double HexGrid::circumradius_m() const { return center_spacing_m / std::sqrt(3.0); }

void RadioParams::validate() const {
  if (!(tx_psd > 0.0)) throw ConfigError("tx_psd must be positive");
  if (!(noise_psd > 0.0)) throw ConfigError("noise_psd must be positive");
  if (!(pathloss_exponent > 0.0)) throw ConfigError("pathloss_exponent must be positive");
  if (!(min_distance_m > 0.0)) throw ConfigError("min_distance_m must be positive");
}

SpectralEfficiencyTable::SpectralEfficiencyTable(std::size_t k) : k_(k) {
  if (k == 0 || k > kMaxBts) throw ConfigError("number of BTS's must be in [1, 16]");
  s_.assign(k * subset_count(k), 0.0);
}

void SpectralEfficiencyTable::validate(double slack) const {
  const std::size_t n = subsets();
  for (std::size_t i = 0; i < k_; ++i) {
    if (!(operator()(i, BtsSubset::single(i)) > 0.0)) {
      throw ConfigError("s_" + std::to_string(i + 1) + "({" + std::to_string(i + 1) + "}) must be positive");
    }
    for (std::uint32_t c = 0; c < n; ++c) {
      const BtsSubset set{c};
      const double v = operator()(i, set);
      if (!std::isfinite(v) || v < 0.0) throw ConfigError("efficiency entries must be finite and non-negative");
      if (!set.contains(i)) {
        if (v != 0.0) throw ConfigError("s_i(C) must vanish when i is not in C");
        continue;
      }
      // One-element extensions suffice: monotonicity is transitive.
      for (std::size_t j = 0; j < k_; ++j) {
        if (set.contains(j)) continue;
        if (operator()(i, set.with(j)) > v + slack) {
          throw ConfigError("adding an interferer raised s_" + std::to_string(i + 1) + " on " + set.to_string());
        }
      }
    }
  }
}

HexGrid generate_hex_grid(double area_width_m, double area_height_m, double center_spacing_m) {
  if (!(area_width_m > 0.0) || !(area_height_m > 0.0) || !(center_spacing_m > 0.0)) {
    throw ConfigError("grid dimensions must be positive");
  }
  if (center_spacing_m > std::min(area_width_m, area_height_m)) {
    throw ConfigError("center spacing exceeds the area");
  }
  HexGrid grid;
  grid.area_width_m = area_width_m;
  grid.area_height_m = area_height_m;
  grid.center_spacing_m = center_spacing_m;

  const double d = center_spacing_m;
  const double radius = grid.circumradius_m();
  const double column_step = 1.5 * radius;

  // First hexagon touches the left and bottom edges.
  std::map<std::pair<long long, long long>, std::size_t> vertex_ids;
  for (std::size_t col = 0;; ++col) {
    const double cx = radius + column_step * static_cast<double>(col);
    if (cx > area_width_m + 1e-9) break;
    const double y0 = (col % 2 == 0) ? d / 2.0 : d;
    for (std::size_t row = 0;; ++row) {
      const double cy = y0 + d * static_cast<double>(row);
      if (cy > area_height_m + 1e-9) break;
      const Point center{cx, cy};
      grid.cells.push_back({grid.cells.size(), center});
      const Point corners[6] = {{cx + radius, cy},          {cx + radius / 2, cy + d / 2},
                                {cx - radius / 2, cy + d / 2}, {cx - radius, cy},
                                {cx - radius / 2, cy - d / 2}, {cx + radius / 2, cy - d / 2}};
      for (const Point& v : corners) {
        if (!inside(v, area_width_m, area_height_m)) continue;
        vertex_ids.emplace(lattice_key(v), 0);
      }
    }
  }
  // Number vertices in lattice (x, then y) order so ids do not depend on
  // discovery order.
  for (auto& [key, id] : vertex_ids) {
    id = grid.vertices.size();
    grid.vertices.push_back({id, Point{static_cast<double>(key.first) * 1e-9,
                                       static_cast<double>(key.second) * 1e-9}});
  }
  return grid;
}

Deployment place_bts(const HexGrid& grid, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k > kMaxBts) throw ConfigError("number of BTS's must be in [1, 16]");
  if (k > grid.vertices.size()) {
    throw TooManyBtsError("requested " + std::to_string(k) + " BTS's but the grid has only " +
                          std::to_string(grid.vertices.size()) + " vertices");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> pool(grid.vertices.size());
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  // Partial Fisher-Yates: the first k slots are a uniform k-sample.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  Deployment dep;
  dep.grid = grid;
  for (std::size_t i = 0; i < k; ++i) {
    dep.bts_vertices.push_back(pool[i]);
    dep.bts_positions.push_back(grid.vertices[pool[i]].pos);
  }
  return dep;
}

Deployment associate(Deployment deployment) {
  const std::size_t k = deployment.num_bts();
  if (k == 0) throw ConfigError("deployment has no BTS's");
  deployment.association.assign(deployment.grid.cells.size(), {});
  for (const HexCell& cell : deployment.grid.cells) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& b : deployment.bts_positions) best = std::min(best, distance(cell.center, b));
    std::vector<std::size_t> nearest;
    for (std::size_t i = 0; i < k; ++i) {
      if (distance(cell.center, deployment.bts_positions[i]) <= best * (1.0 + kTieTolerance)) nearest.push_back(i);
    }
    const double share = 1.0 / static_cast<double>(nearest.size());
    for (std::size_t i : nearest) deployment.association[cell.id].push_back({i, share});
  }
  return deployment;
}

SpectralEfficiencyTable build_efficiency_table(const Deployment& deployment, const RadioParams& radio) {
  const std::vector<double> psd(deployment.num_bts(), radio.tx_psd);
  return build_efficiency_table(deployment, radio, psd);
}

SpectralEfficiencyTable build_efficiency_table(const Deployment& deployment, const RadioParams& radio,
                                               std::span<const double> psd) {
  radio.validate();
  const std::size_t k = deployment.num_bts();
  if (!deployment.is_associated()) throw ConfigError("deployment is not associated");
  if (psd.size() != k) throw DimensionError("psd vector does not match the number of BTS's");
  for (double p : psd) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ConfigError("transmit PSD must be positive and finite");
  }
  SpectralEfficiencyTable table(k);
  const std::size_t n = table.subsets();
  const double log_scale = radio.log_base == LogBase::base2 ? 1.0 / std::log(2.0) : 1.0;

  const std::vector<double> served = served_cells(deployment);
  for (std::size_t i = 0; i < k; ++i) {
    if (!(served[i] > 0.0)) throw OrphanBtsError(i);
  }

  std::vector<double> received(k);      // p_j * l_j at the cell
  std::vector<double> interference(n);  // sum over j in C of received[j]
  std::vector<double> efficiency(n);
  for (const HexCell& cell : deployment.grid.cells) {
    for (std::size_t j = 0; j < k; ++j) {
      const double d = std::max(distance(cell.center, deployment.bts_positions[j]), radio.min_distance_m);
      received[j] = psd[j] * std::pow(d, -radio.pathloss_exponent);
    }
    kernels::subset_sums(received, interference);
    for (const CellShare& share : deployment.association[cell.id]) {
      const std::size_t i = share.bts;
      const double signal = received[i];
      const std::uint32_t bit = std::uint32_t{1} << i;
      std::fill(efficiency.begin(), efficiency.end(), 0.0);
      for (std::uint32_t c = 0; c < n; ++c) {
        if ((c & bit) == 0) continue;
        const double others = interference[c & ~bit];
        efficiency[c] = std::log1p(signal / (others + radio.noise_psd)) * log_scale;
      }
      kernels::axpy(share.weight / served[i], efficiency, table.row(i));
    }
  }
  return table;
}

std::vector<double> served_cells(const Deployment& deployment) {
  std::vector<double> served(deployment.num_bts(), 0.0);
  for (const auto& shares : deployment.association) {
    for (const CellShare& s : shares) served.at(s.bts) += s.weight;
  }
  return served;
}

}  // namespace hetspec
