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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace hetspec::lp {

/// maximize c'z  subject to  A z = b, z >= 0,
/// starting from a feasible basis (one column index per row).
struct Problem {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  std::vector<Eigen::Index> basis;
};

enum class Status { optimal, unbounded };

struct Result {
  Status status = Status::optimal;
  Eigen::VectorXd z;
  double value = 0.0;
  std::vector<Eigen::Index> basis;
  std::size_t pivots = 0;
};

/// Dense tableau primal simplex. Uses Dantzig pricing and falls back to
/// Bland's rule after a run of degenerate pivots. Throws NumericError if the
/// starting basis is singular or infeasible, or the pivot cap is hit.
Result maximize(const Problem& problem, std::size_t max_pivots = 100000);

}  // namespace hetspec::lp
