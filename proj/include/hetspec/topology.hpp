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

// Quantized HetNet scenario: a flat-top hexagon tiling of a rectangular
// area, BTS's dropped on hexagon vertices, UEs lumped at hexagon centers and
// attached to their nearest BTS. The scenario is reduced to a table of
// spectral efficiencies s_i(C) for every BTS i and active set C.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hetspec/subset.hpp"

namespace hetspec {

struct Point {
  double x_m = 0.0;
  double y_m = 0.0;
};

double distance(Point a, Point b);

struct HexCell {
  std::size_t id = 0;
  Point center;
};

struct HexVertex {
  std::size_t id = 0;
  Point pos;
};

/// Flat-top tiling; only hexagons whose center lies inside the area are
/// kept, and only vertices of kept hexagons that lie inside the area.
struct HexGrid {
  double area_width_m = 0.0;
  double area_height_m = 0.0;
  double center_spacing_m = 0.0;
  std::vector<HexCell> cells;
  std::vector<HexVertex> vertices;

  /// Circumradius of a hexagon (center to vertex).
  double circumradius_m() const;
};

struct CellShare {
  std::size_t bts = 0;  // 0-based
  double weight = 0.0;
};

struct Deployment {
  HexGrid grid;
  std::vector<Point> bts_positions;       // index = BTS id (0-based)
  std::vector<std::size_t> bts_vertices;  // grid vertex each BTS sits on
  /// association[cell] lists the nearest BTS's with equal shares.
  /// Empty until associate() runs.
  std::vector<std::vector<CellShare>> association;

  std::size_t num_bts() const { return bts_positions.size(); }
  bool is_associated() const { return !association.empty(); }
};

enum class LogBase { natural, base2 };

struct RadioParams {
  double tx_psd = 1.0;             // p_i, power/Hz
  double noise_psd = 0.125e-6;     // n_i, power/Hz
  double pathloss_exponent = 3.0;  // l = d^-alpha
  LogBase log_base = LogBase::natural;
  double min_distance_m = 1.0;     // path loss uses max(d, min_distance_m)

  void validate() const;
};

/// s_i(C) for every BTS i and every bitmask C, stored row-major
/// (one row of 2^K entries per BTS).
class SpectralEfficiencyTable {
 public:
  SpectralEfficiencyTable() = default;
  explicit SpectralEfficiencyTable(std::size_t k);

  std::size_t k() const { return k_; }
  std::size_t subsets() const { return subset_count(k_); }

  double operator()(std::size_t i, BtsSubset c) const { return s_[i * subsets() + c.mask()]; }
  void set(std::size_t i, BtsSubset c, double value) { s_[i * subsets() + c.mask()] = value; }

  std::span<const double> row(std::size_t i) const {
    return {s_.data() + i * subsets(), subsets()};
  }
  std::span<double> row(std::size_t i) { return {s_.data() + i * subsets(), subsets()}; }

  /// Throws ConfigError unless s_i(C) = 0 for i not in C, s_i({i}) > 0 and
  /// s_i(C) >= s_i(C') whenever i in C subset of C'. `slack` loosens the
  /// monotonicity comparison for tables read from disk.
  void validate(double slack = 0.0) const;

  friend bool operator==(const SpectralEfficiencyTable&, const SpectralEfficiencyTable&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<double> s_;
};

/// Relative tolerance under which two cell-to-BTS distances count as a tie.
inline constexpr double kTieTolerance = 1e-9;

HexGrid generate_hex_grid(double area_width_m, double area_height_m, double center_spacing_m);

/// Drops k BTS's on distinct vertices, uniformly without replacement.
Deployment place_bts(const HexGrid& grid, std::size_t k, std::uint64_t seed);

/// Fills the nearest-BTS association. Ties share the cell equally.
Deployment associate(Deployment deployment);

/// Uniform transmit PSD from `radio`.
SpectralEfficiencyTable build_efficiency_table(const Deployment& deployment, const RadioParams& radio);

/// Per-BTS transmit PSD; interference from j uses psd[j].
SpectralEfficiencyTable build_efficiency_table(const Deployment& deployment, const RadioParams& radio,
                                               std::span<const double> psd);

/// Sum of association weights per BTS (number of hexagons served).
std::vector<double> served_cells(const Deployment& deployment);

}  // namespace hetspec
