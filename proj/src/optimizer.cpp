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

#include "hetspec/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include <Eigen/Dense>

#include "hetspec/error.hpp"
#include "hetspec/lp.hpp"

namespace hetspec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The objective restricted to a fixed list of columns, in dense form.
class FaceProblem {
 public:
  FaceProblem(std::vector<BtsSubset> columns, const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
              double margin)
      : columns_(std::move(columns)),
        s_(static_cast<Eigen::Index>(table.k()), static_cast<Eigen::Index>(columns_.size())),
        lambda_(Eigen::Map<const Eigen::VectorXd>(traffic.lambda.data(), static_cast<Eigen::Index>(traffic.k()))),
        margin_(margin) {
    const std::vector<double> w = traffic.weights();
    weight_ = Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
    for (Eigen::Index j = 0; j < s_.cols(); ++j) {
      for (Eigen::Index i = 0; i < s_.rows(); ++i) s_(i, j) = table(static_cast<std::size_t>(i), columns_[j]);
    }
  }

  Eigen::Index size() const { return s_.cols(); }
  const Eigen::MatrixXd& s() const { return s_; }
  const std::vector<BtsSubset>& columns() const { return columns_; }

  /// +inf outside the stable region.
  double value(const Eigen::VectorXd& x) const {
    const Eigen::VectorXd slack = s_ * x - lambda_;
    if ((slack.array() <= margin_).any()) return kInf;
    return (weight_.array() / slack.array()).sum();
  }

  void derivatives(const Eigen::VectorXd& x, Eigen::VectorXd& grad, Eigen::MatrixXd& hess) const {
    const Eigen::ArrayXd slack = (s_ * x - lambda_).array();
    const Eigen::VectorXd du = (-weight_.array() / slack.square()).matrix();
    const Eigen::VectorXd d2u = (2.0 * weight_.array() / slack.cube()).matrix();
    grad = s_.transpose() * du;
    hess = s_.transpose() * d2u.asDiagonal() * s_;
  }

 private:
  std::vector<BtsSubset> columns_;
  Eigen::MatrixXd s_;
  Eigen::VectorXd lambda_;
  Eigen::VectorXd weight_;
  double margin_;
};

// min_y c'y + y'Qy/2 over the unit simplex, Q positive definite, by a primal
// active-set method warm-started at the feasible point y. Entries leaving
// the free set are set to exactly zero.
Eigen::VectorXd simplex_qp(const Eigen::MatrixXd& q, const Eigen::VectorXd& c, Eigen::VectorXd y) {
  const Eigen::Index n = y.size();
  std::vector<bool> free(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) free[j] = y[j] > 0.0;

  const std::size_t max_steps = 20 * static_cast<std::size_t>(n) + 100;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const Eigen::VectorXd g = q * y + c;
    std::vector<Eigen::Index> f;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (free[j]) f.push_back(j);
    }
    const auto nf = static_cast<Eigen::Index>(f.size());
    Eigen::MatrixXd qff(nf, nf);
    Eigen::VectorXd gf(nf);
    for (Eigen::Index a = 0; a < nf; ++a) {
      gf[a] = g[f[a]];
      for (Eigen::Index b = 0; b < nf; ++b) qff(a, b) = q(f[a], f[b]);
    }
    // Equality-constrained step: Q p + nu 1 = -g, 1'p = 0.
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(qff);
    const Eigen::VectorXd qi_g = ldlt.solve(gf);
    const Eigen::VectorXd qi_1 = ldlt.solve(Eigen::VectorXd::Ones(nf));
    const double nu = -qi_g.sum() / qi_1.sum();
    const Eigen::VectorXd p = -(qi_g + nu * qi_1);

    double alpha = 1.0;
    Eigen::Index blocking = -1;
    for (Eigen::Index a = 0; a < nf; ++a) {
      if (p[a] >= 0.0) continue;
      const double ratio = -y[f[a]] / p[a];
      if (ratio < alpha) {
        alpha = ratio;
        blocking = f[a];
      }
    }
    for (Eigen::Index a = 0; a < nf; ++a) y[f[a]] += alpha * p[a];
    if (blocking >= 0) {
      y[blocking] = 0.0;
      free[blocking] = false;
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (y[j] < 0.0) {
        y[j] = 0.0;
        free[j] = false;
      }
    }
    if (blocking >= 0) continue;

    // Full step: y minimizes over the current face. Release the bound with
    // the most negative multiplier, if any.
    const Eigen::VectorXd g_new = q * y + c;
    double mean = 0.0;
    std::size_t count = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (free[j]) {
        mean += g_new[j];
        ++count;
      }
    }
    mean /= static_cast<double>(std::max<std::size_t>(count, 1));
    const double scale = 1.0 + g_new.cwiseAbs().maxCoeff();
    Eigen::Index release = -1;
    double worst = -1e-13 * scale;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (free[j]) continue;
      const double mu = g_new[j] - mean;
      if (mu < worst) {
        worst = mu;
        release = j;
      }
    }
    if (release < 0) break;
    free[release] = true;
  }
  return y / y.sum();
}

SpectrumPartition to_partition(std::size_t k, const std::vector<BtsSubset>& columns, const Eigen::VectorXd& x) {
  SpectrumPartition p(k);
  for (std::size_t j = 0; j < columns.size(); ++j) p.set(columns[j], x[static_cast<Eigen::Index>(j)]);
  return p;
}

SolveReport make_report(SpectrumPartition partition, const SpectralEfficiencyTable& table,
                        const TrafficProfile& traffic, SolveStatus status, double margin) {
  SolveReport report;
  report.rates = worst_case_rates(partition, table);
  report.objective_value = objective_from_rates(report.rates, traffic, margin);
  report.support_size = partition.support_size();
  report.partition = std::move(partition);
  report.status = status;
  return report;
}

SolveReport infeasible_report(std::size_t k, double margin_found) {
  SolveReport report;
  report.partition = SpectrumPartition(k);
  report.objective_value = kInf;
  report.status = SolveStatus::infeasible;
  report.feasibility_margin = margin_found;
  return report;
}

bool is_stable(const SpectrumPartition& x, const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
               double margin) {
  const RateVector r = worst_case_rates(x, table);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] - traffic.lambda[i] > margin)) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal:
      return "optimal";
    case SolveStatus::infeasible:
      return "infeasible";
    case SolveStatus::max_iterations:
      return "max-iterations";
  }
  return "unknown";
}

FeasibilityResult find_feasible(const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                                std::span<const BtsSubset> columns, double margin) {
  check_dimensions(table, traffic);
  traffic.validate();
  const std::size_t k = table.k();

  std::vector<BtsSubset> cols(columns.begin(), columns.end());
  if (cols.empty()) {
    // Full set first so that the starting basis is full reuse.
    for (std::uint32_t m = static_cast<std::uint32_t>(table.subsets()) - 1; m >= 1; --m) cols.emplace_back(m);
  }
  for (BtsSubset b : cols) {
    if (b.is_empty() || b.mask() >= table.subsets()) throw DimensionError("invalid column " + b.to_string());
  }

  // Variables: x_B (one per column), tau = t + shift >= 0, surplus_i.
  // Row i:  -sum_B s_i(B) x_B + tau + surplus_i = shift - lambda_i
  // Row K:   sum_B x_B = 1
  const auto ncols = static_cast<Eigen::Index>(cols.size());
  const auto kk = static_cast<Eigen::Index>(k);
  const double shift = *std::max_element(traffic.lambda.begin(), traffic.lambda.end()) + 1.0;
  const Eigen::Index tau = ncols;

  lp::Problem prob;
  prob.a = Eigen::MatrixXd::Zero(kk + 1, ncols + 1 + kk);
  prob.b = Eigen::VectorXd::Zero(kk + 1);
  prob.c = Eigen::VectorXd::Zero(ncols + 1 + kk);
  for (Eigen::Index j = 0; j < ncols; ++j) {
    for (Eigen::Index i = 0; i < kk; ++i) prob.a(i, j) = -table(static_cast<std::size_t>(i), cols[j]);
    prob.a(kk, j) = 1.0;
  }
  for (Eigen::Index i = 0; i < kk; ++i) {
    prob.a(i, tau) = 1.0;
    prob.a(i, tau + 1 + i) = 1.0;
    prob.b[i] = shift - traffic.lambda[i];
    prob.basis.push_back(tau + 1 + i);
  }
  prob.b[kk] = 1.0;
  prob.basis.push_back(0);
  prob.c[tau] = 1.0;

  const lp::Result res = lp::maximize(prob);
  if (res.status != lp::Status::optimal) throw NumericError("phase-one LP reported unbounded");

  FeasibilityResult out;
  out.margin = res.z[tau] - shift;
  out.feasible = out.margin > margin;
  out.partition = SpectrumPartition(k);
  double total = 0.0;
  for (Eigen::Index j = 0; j < ncols; ++j) total += res.z[j];
  for (Eigen::Index j = 0; j < ncols; ++j) out.partition.set(cols[j], res.z[j] / total);
  return out;
}

SpectrumPartition caratheodory_reduce(const SpectrumPartition& partition, const SpectralEfficiencyTable& table) {
  check_dimensions(partition, table);
  const std::size_t k = table.k();
  std::vector<BtsSubset> cols;
  std::vector<double> x;
  for (const auto& [b, v] : partition.entries()) {
    cols.push_back(b);
    x.push_back(v);
  }
  for (;;) {
    const auto m = static_cast<Eigen::Index>(cols.size());
    if (m <= 1) break;
    Eigen::MatrixXd a(static_cast<Eigen::Index>(k) + 1, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < k; ++i) a(static_cast<Eigen::Index>(i), j) = table(i, cols[j]);
      a(static_cast<Eigen::Index>(k), j) = 1.0;
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const bool dependent = m > a.rows() || sv[sv.size() - 1] <= 1e-10 * sv[0];
    if (!dependent) break;
    // Move along a null direction until one weight hits zero; r is unchanged.
    Eigen::VectorXd v = svd.matrixV().col(m - 1);
    double theta = kInf;
    Eigen::Index drop = -1;
    for (int sign = 0; sign < 2 && drop < 0; ++sign) {
      if (sign == 1) v = -v;
      for (Eigen::Index j = 0; j < m; ++j) {
        if (v[j] > 1e-12 && x[j] / v[j] < theta) {
          theta = x[j] / v[j];
          drop = j;
        }
      }
    }
    if (drop < 0) break;
    for (Eigen::Index j = 0; j < m; ++j) x[j] = std::max(x[j] - theta * v[j], 0.0);
    x[drop] = 0.0;
    std::vector<BtsSubset> keep_cols;
    std::vector<double> keep_x;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (x[j] > 0.0) {
        keep_cols.push_back(cols[j]);
        keep_x.push_back(x[j]);
      }
    }
    cols = std::move(keep_cols);
    x = std::move(keep_x);
  }
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  SpectrumPartition out(k);
  for (std::size_t j = 0; j < cols.size(); ++j) out.set(cols[j], x[j] / total);
  return out;
}

RestrictedResult solve_restricted(const CandidateSet& candidate, const SpectrumPartition& x0,
                                  const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                                  const SolverOptions& options) {
  check_dimensions(x0, table);
  check_dimensions(table, traffic);
  for (const auto& [b, v] : x0.entries()) {
    if (!candidate.contains(b)) throw ConfigError("starting point uses " + b.to_string() + " outside the candidate set");
  }
  const double margin = options.stability_margin;
  const double f0 = objective(x0, table, traffic, margin);

  FaceProblem face(std::vector<BtsSubset>(candidate.begin(), candidate.end()), table, traffic, margin);
  const Eigen::Index n = face.size();
  Eigen::VectorXd x(n);
  for (Eigen::Index j = 0; j < n; ++j) x[j] = x0[face.columns()[j]];

  RestrictedResult result;
  double f = face.value(x);
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
  for (std::size_t it = 0; it < options.max_inner_iters; ++it) {
    face.derivatives(x, grad, hess);
    // Proximal term keeps the model strictly convex when the columns outnumber
    // the rank of the rate map.
    const double rho = 1e-10 * std::max(hess.diagonal().maxCoeff(), 1e-300) + 1e-300;
    Eigen::MatrixXd q = hess;
    q.diagonal().array() += rho;
    const Eigen::VectorXd y = simplex_qp(q, grad - q * x, x);
    const Eigen::VectorXd d = y - x;
    const double decrement = -grad.dot(d);
    result.iterations = it + 1;
    if (decrement <= 1e-3 * options.tol * std::max(1.0, f)) {
      // Take the last step anyway: it zeroes entries the QP left behind.
      const double f_last = face.value(y);
      if (f_last <= f) {
        x = y;
        f = f_last;
      }
      result.converged = true;
      break;
    }
    // Backtracking on the true objective; the pole at r_i = lambda_i acts as
    // a barrier.
    double step = 1.0;
    Eigen::VectorXd trial = y;
    double f_trial = face.value(trial);
    while (!(f_trial <= f - 1e-4 * step * decrement)) {
      step *= 0.5;
      if (step < 1e-16) break;
      trial = x + step * d;
      f_trial = face.value(trial);
    }
    if (!(f_trial < f)) {
      // No further progress possible in floating point.
      result.converged = decrement <= options.tol * std::max(1.0, f);
      break;
    }
    x = trial;
    f = f_trial;
  }

  SpectrumPartition out = caratheodory_reduce(to_partition(table.k(), face.columns(), x), table);
  double f_out = kInf;
  if (is_stable(out, table, traffic, margin)) f_out = objective(out, table, traffic, margin);
  if (!(f_out <= f0 + 1e-12 * std::abs(f0))) {
    out = x0;
    f_out = f0;
  }
  result.partition = std::move(out);
  result.objective = f_out;
  return result;
}

SolveReport solve(const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                  const SolverOptions& options) {
  check_dimensions(table, traffic);
  traffic.validate();
  const std::size_t k = table.k();
  const double margin = options.stability_margin;

  SpectrumPartition x0 = SpectrumPartition::full_reuse(k);
  double feasibility_margin = 0.0;
  if (!is_stable(x0, table, traffic, margin)) {
    const FeasibilityResult feas = find_feasible(table, traffic, {}, margin);
    if (!feas.feasible) return infeasible_report(k, feas.margin);
    x0 = feas.partition;
    feasibility_margin = feas.margin;
  }

  // Non-empty subsets ordered by (gradient, mask) pick the K entering columns.
  const std::uint32_t n = static_cast<std::uint32_t>(table.subsets());
  std::vector<std::uint32_t> order(n - 1);
  std::iota(order.begin(), order.end(), 1U);
  const std::size_t take = std::min<std::size_t>(k, order.size());

  CandidateSet candidate;
  for (BtsSubset b : x0.support(0.0)) candidate.insert(b);
  CandidateSet previous;
  CandidateSet entering;
  for (std::uint32_t m = 1; m < n; ++m) entering.emplace(m);

  std::vector<double> trace{objective(x0, table, traffic, margin)};
  std::vector<std::size_t> sizes;
  std::size_t iterations = 0;
  bool done = false;
  while (iterations < options.max_outer_iters) {
    if (std::includes(previous.begin(), previous.end(), entering.begin(), entering.end())) {
      done = true;
      break;
    }
    previous = candidate;
    sizes.push_back(candidate.size());
    const RestrictedResult inner = solve_restricted(candidate, x0, table, traffic, options);
    ++iterations;
    trace.push_back(inner.objective);

    const std::vector<double> grad = objective_gradient(inner.partition, table, traffic, margin);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                      [&](std::uint32_t a, std::uint32_t b) {
                        return grad[a] < grad[b] || (grad[a] == grad[b] && a < b);
                      });
    entering.clear();
    for (std::size_t j = 0; j < take; ++j) entering.emplace(order[j]);
    candidate.insert(entering.begin(), entering.end());
    x0 = inner.partition;
  }
  if (!done && std::includes(previous.begin(), previous.end(), entering.begin(), entering.end())) done = true;

  SolveReport report = make_report(std::move(x0), table, traffic,
                                   done ? SolveStatus::optimal : SolveStatus::max_iterations, margin);
  report.iterations = iterations;
  report.objective_trace = std::move(trace);
  report.candidate_sizes = std::move(sizes);
  report.feasibility_margin = feasibility_margin;
  return report;
}

SolveReport solve_orthogonal_baseline(const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                                      const SolverOptions& options) {
  check_dimensions(table, traffic);
  traffic.validate();
  const std::size_t k = table.k();
  std::vector<BtsSubset> singles;
  for (std::size_t i = 0; i < k; ++i) singles.push_back(BtsSubset::single(i));
  const FeasibilityResult feas = find_feasible(table, traffic, singles, options.stability_margin);
  if (!feas.feasible) return infeasible_report(k, feas.margin);

  const CandidateSet candidate(singles.begin(), singles.end());
  const RestrictedResult inner = solve_restricted(candidate, feas.partition, table, traffic, options);
  SolveReport report = make_report(inner.partition, table, traffic,
                                   inner.converged ? SolveStatus::optimal : SolveStatus::max_iterations,
                                   options.stability_margin);
  report.iterations = 1;
  report.objective_trace = {objective(feas.partition, table, traffic, options.stability_margin), inner.objective};
  report.candidate_sizes = {candidate.size()};
  report.feasibility_margin = feas.margin;
  return report;
}

SolveReport full_reuse_baseline(const SpectralEfficiencyTable& table, const TrafficProfile& traffic,
                                double margin) {
  check_dimensions(table, traffic);
  traffic.validate();
  const std::size_t k = table.k();
  SpectrumPartition x = SpectrumPartition::full_reuse(k);
  if (!is_stable(x, table, traffic, margin)) {
    SolveReport report = infeasible_report(k, 0.0);
    report.rates = worst_case_rates(x, table);
    double slack = kInf;
    for (std::size_t i = 0; i < k; ++i) slack = std::min(slack, report.rates[i] - traffic.lambda[i]);
    report.feasibility_margin = slack;
    report.partition = std::move(x);
    report.support_size = 1;
    return report;
  }
  SolveReport report = make_report(std::move(x), table, traffic, SolveStatus::optimal, margin);
  report.objective_trace = {report.objective_value};
  return report;
}

double stationarity_gap(const SpectrumPartition& partition, const SpectralEfficiencyTable& table,
                        const TrafficProfile& traffic) {
  const std::vector<double> grad = objective_gradient(partition, table, traffic);
  double lowest = kInf;
  for (std::size_t m = 1; m < grad.size(); ++m) lowest = std::min(lowest, grad[m]);
  double highest_supported = -kInf;
  for (BtsSubset b : partition.support()) highest_supported = std::max(highest_supported, grad[b.mask()]);
  return highest_supported - lowest;
}

}  // namespace hetspec
