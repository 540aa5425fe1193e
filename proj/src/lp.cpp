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

#include "hetspec/lp.hpp"

#include <cmath>
#include <limits>

#include "hetspec/error.hpp"

namespace hetspec::lp {
namespace {

constexpr double kCostTol = 1e-11;
constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-9;
constexpr std::size_t kDegenerateRunBeforeBland = 50;

}  // namespace

Result maximize(const Problem& problem, std::size_t max_pivots) {
  const Eigen::Index m = problem.a.rows();
  const Eigen::Index n = problem.a.cols();
  if (problem.b.size() != m || problem.c.size() != n || static_cast<Eigen::Index>(problem.basis.size()) != m) {
    throw NumericError("lp: inconsistent problem dimensions");
  }

  Eigen::MatrixXd basis_cols(m, m);
  for (Eigen::Index r = 0; r < m; ++r) basis_cols.col(r) = problem.a.col(problem.basis[r]);
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_cols);
  if (!lu.isInvertible()) throw NumericError("lp: starting basis is singular");

  // Tableau [B^-1 A | B^-1 b].
  Eigen::MatrixXd t(m, n + 1);
  t.leftCols(n) = lu.solve(problem.a);
  t.col(n) = lu.solve(problem.b);
  if ((t.col(n).array() < -kFeasTol).any()) throw NumericError("lp: starting basis is infeasible");

  std::vector<Eigen::Index> basis = problem.basis;
  std::size_t pivots = 0;
  std::size_t degenerate_run = 0;

  for (;;) {
    Eigen::VectorXd cb(m);
    for (Eigen::Index r = 0; r < m; ++r) cb[r] = problem.c[basis[r]];
    const Eigen::RowVectorXd reduced = problem.c.transpose() - cb.transpose() * t.leftCols(n);

    const bool bland = degenerate_run >= kDegenerateRunBeforeBland;
    Eigen::Index enter = -1;
    double best = kCostTol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (reduced[j] > best) {
        enter = j;
        if (bland) break;
        best = reduced[j];
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index r = 0; r < m; ++r) {
      const double a = t(r, enter);
      if (a <= kPivotTol) continue;
      const double q = std::max(t(r, n), 0.0) / a;
      if (q < ratio - 1e-15 || (q <= ratio + 1e-15 && leave >= 0 && basis[r] < basis[leave])) {
        ratio = q;
        leave = r;
      }
    }
    if (leave < 0) {
      Result res;
      res.status = Status::unbounded;
      res.basis = basis;
      res.pivots = pivots;
      return res;
    }

    if (++pivots > max_pivots) throw NumericError("lp: pivot limit reached");
    degenerate_run = ratio <= 1e-12 ? degenerate_run + 1 : 0;

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index r = 0; r < m; ++r) {
      if (r == leave) continue;
      const double f = t(r, enter);
      if (f != 0.0) t.row(r) -= f * t.row(leave);
    }
    basis[leave] = enter;
  }

  Result res;
  res.status = Status::optimal;
  res.z = Eigen::VectorXd::Zero(n);
  for (Eigen::Index r = 0; r < m; ++r) res.z[basis[r]] = std::max(t(r, n), 0.0);
  res.value = problem.c.dot(res.z);
  res.basis = std::move(basis);
  res.pivots = pivots;
  return res;
}

}  // namespace hetspec::lp
