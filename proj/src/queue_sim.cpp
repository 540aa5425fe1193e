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

#include "hetspec/queue_sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <limits>
#include <random>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "hetspec/error.hpp"

namespace hetspec {
namespace {

struct ReplicationResult {
  std::vector<double> queue_length;
  std::vector<double> active_fraction;
  std::vector<double> tally_sum;
  std::vector<std::uint64_t> tally_count;
  bool diverging = false;
};

// One sample path of the coupled queues. `rates` holds r_i(A) at [A * K + i].
ReplicationResult run_replication(const std::vector<double>& rates, const std::vector<double>& lambda,
                                  const SimConfig& config, std::uint64_t seed) {
  const std::size_t k = lambda.size();
  const std::size_t n_sets = std::size_t{1} << k;
  std::vector<double> departure_total(n_sets, 0.0);
  for (std::size_t a = 0; a < n_sets; ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      if ((a >> i) & 1U) departure_total[a] += rates[a * k + i];
    }
  }
  double arrival_total = 0.0;
  for (double l : lambda) arrival_total += l;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const double warmup = config.effective_warmup();
  const double horizon = config.horizon;
  ReplicationResult out;
  out.queue_length.assign(k, 0.0);
  out.active_fraction.assign(k, 0.0);
  out.tally_sum.assign(k, 0.0);
  out.tally_count.assign(k, 0);

  std::vector<std::uint64_t> q(k, 0);
  std::vector<std::deque<double>> arrivals(k);
  std::uint64_t in_system = 0;
  std::uint32_t active = 0;
  double t = 0.0;

  for (;;) {
    const double total = arrival_total + departure_total[active];
    const double dt = std::exponential_distribution<double>(total)(rng);
    const double t_next = std::min(t + dt, horizon);
    const double lo = std::max(t, warmup);
    if (t_next > lo) {
      const double span = t_next - lo;
      for (std::size_t i = 0; i < k; ++i) {
        if (q[i] == 0) continue;
        out.queue_length[i] += static_cast<double>(q[i]) * span;
        out.active_fraction[i] += span;
      }
    }
    if (t + dt >= horizon) break;
    t += dt;

    double u = unit(rng) * total;
    if (u < arrival_total) {
      std::size_t i = 0;
      while (i + 1 < k && u >= lambda[i]) u -= lambda[i++];
      ++q[i];
      arrivals[i].push_back(t);
      active |= std::uint32_t{1} << i;
      if (++in_system > config.divergence_cap) {
        out.diverging = true;
        break;
      }
    } else {
      u -= arrival_total;
      std::size_t i = k;
      for (std::size_t j = 0; j < k; ++j) {
        if (((active >> j) & 1U) == 0) continue;
        i = j;
        if (u < rates[active * k + j]) break;
        u -= rates[active * k + j];
      }
      const double arrived = arrivals[i].front();
      arrivals[i].pop_front();
      if (arrived >= warmup) {
        out.tally_sum[i] += t - arrived;
        ++out.tally_count[i];
      }
      --in_system;
      if (--q[i] == 0) active &= ~(std::uint32_t{1} << i);
    }
  }
  const double observed = horizon - warmup;
  for (std::size_t i = 0; i < k; ++i) {
    out.queue_length[i] /= observed;
    out.active_fraction[i] /= observed;
  }
  return out;
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

void SimConfig::validate() const {
  if (!(horizon > 0.0)) throw ConfigError("simulation horizon must be positive");
  if (!(effective_warmup() < horizon)) throw ConfigError("warm-up must be shorter than the horizon");
  if (replications < 1) throw ConfigError("at least one replication is required");
  if (divergence_cap < 1) throw ConfigError("divergence cap must be positive");
}

std::uint64_t replication_seed(std::uint64_t master, std::size_t index) {
  // splitmix64 of master + (index + 1) * golden gamma.
  std::uint64_t z = master + (static_cast<std::uint64_t>(index) + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double ci95_half_width(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  if (n < 2) return std::numeric_limits<double>::infinity();
  const double m = mean(samples);
  double ss = 0.0;
  for (double x : samples) ss += (x - m) * (x - m);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  const boost::math::students_t dist(static_cast<double>(n - 1));
  return boost::math::quantile(dist, 0.975) * sd / std::sqrt(static_cast<double>(n));
}

SimulationStats simulate(const SpectralEfficiencyTable& table, const SpectrumPartition& partition,
                         const TrafficProfile& traffic, const SimConfig& config) {
  config.validate();
  check_dimensions(partition, table);
  check_dimensions(table, traffic);
  traffic.validate();
  partition.validate(1e-6);

  const std::size_t k = table.k();
  const std::vector<double> rates = rates_by_active_set(partition, table);

  std::vector<ReplicationResult> reps(config.replications);
  const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < reps.size(); start += workers) {
    std::vector<std::future<ReplicationResult>> batch;
    const std::size_t end = std::min(reps.size(), start + workers);
    for (std::size_t r = start; r < end; ++r) {
      batch.push_back(std::async(std::launch::async, run_replication, std::cref(rates), std::cref(traffic.lambda),
                                 std::cref(config), replication_seed(config.seed, r)));
    }
    for (std::size_t r = start; r < end; ++r) reps[r] = batch[r - start].get();
  }

  SimulationStats stats;
  stats.replications = reps.size();
  const double lambda_total = traffic.total();
  stats.sojourn.resize(k);
  stats.sojourn_ci95.resize(k);
  stats.queue_length.resize(k);
  stats.queue_length_ci95.resize(k);
  stats.active_fraction.resize(k);
  stats.tally_sojourn.resize(k);

  std::vector<double> aggregate(reps.size());
  std::vector<double> tally_aggregate(reps.size());
  for (std::size_t r = 0; r < reps.size(); ++r) {
    stats.diverging = stats.diverging || reps[r].diverging;
    double l_sum = 0.0;
    double t_sum = 0.0;
    std::uint64_t t_count = 0;
    for (std::size_t i = 0; i < k; ++i) {
      l_sum += reps[r].queue_length[i];
      t_sum += reps[r].tally_sum[i];
      t_count += reps[r].tally_count[i];
    }
    aggregate[r] = l_sum / lambda_total;
    tally_aggregate[r] = t_count > 0 ? t_sum / static_cast<double>(t_count) : 0.0;
    stats.packets += t_count;
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> l(reps.size());
    std::vector<double> busy(reps.size());
    double t_sum = 0.0;
    std::uint64_t t_count = 0;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      l[r] = reps[r].queue_length[i];
      busy[r] = reps[r].active_fraction[i];
      t_sum += reps[r].tally_sum[i];
      t_count += reps[r].tally_count[i];
    }
    stats.queue_length[i] = mean(l);
    stats.queue_length_ci95[i] = ci95_half_width(l);
    stats.sojourn[i] = stats.queue_length[i] / traffic.lambda[i];
    stats.sojourn_ci95[i] = stats.queue_length_ci95[i] / traffic.lambda[i];
    stats.active_fraction[i] = mean(busy);
    stats.tally_sojourn[i] = t_count > 0 ? t_sum / static_cast<double>(t_count) : 0.0;
  }
  stats.aggregate_sojourn = mean(aggregate);
  stats.aggregate_ci95 = ci95_half_width(aggregate);
  stats.tally_aggregate_sojourn = mean(tally_aggregate);
  stats.tally_aggregate_ci95 = ci95_half_width(tally_aggregate);
  return stats;
}

BoundComparison compare_bound(const SpectralEfficiencyTable& table, const SpectrumPartition& partition,
                              const TrafficProfile& traffic, const SimConfig& config) {
  BoundComparison out;
  out.analytic = objective(partition, table, traffic);
  out.simulated = simulate(table, partition, traffic, config);
  return out;
}

}  // namespace hetspec
