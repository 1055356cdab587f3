// Copyright 2026 The sargmax-lab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smx/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "smx/argmax.hpp"
#include "smx/distance.hpp"
#include "smx/parallel.hpp"

namespace smx {
namespace {

// Two-sided Poisson counting path with at least one event strictly inside
// each side of a doubling horizon.
struct PoissonPath {
  double horizon = 0.0;
  std::vector<double> left;   // event times as positives, ascending
  std::vector<double> right;  // ascending
};

PoissonPath sample_two_sided_poisson(double rate, Rng& rng) {
  Rng right_rng(rng.next_u64());
  Rng left_rng(rng.next_u64());
  PoissonPath path;
  path.horizon = 4.0 / rate;
  double tr = 0.0, tl = 0.0;
  for (int round = 0; round < 40; ++round) {
    while (tr < path.horizon) {
      tr += right_rng.exponential(rate);
      if (tr < path.horizon) path.right.push_back(tr);
    }
    while (tl < path.horizon) {
      tl += left_rng.exponential(rate);
      if (tl < path.horizon) path.left.push_back(tl);
    }
    if (!path.left.empty() && !path.right.empty()) return path;
    // Rare: a side without events; extend and reuse both streams.
    tr = tl = path.horizon;
    path.horizon *= 2.0;
    path.left.clear();
    path.right.clear();
    // Replay is impossible with consumed draws, so resample fresh gaps on the
    // doubled horizon; the trial stays a deterministic function of the seed.
    right_rng = Rng(rng.next_u64());
    left_rng = Rng(rng.next_u64());
    tr = tl = 0.0;
  }
  throw std::runtime_error("counterexample: no events after 40 horizon doublings");
}

StepFunction counting_path(const PoissonPath& p) {
  std::vector<double> neg(p.left.rbegin(), p.left.rend());
  for (double& v : neg) v = -v;
  return PureJumpFunction(Interval(-p.horizon, p.horizon), neg, p.right).to_step();
}

StepFunction negate(const StepFunction& f) {
  std::vector<double> values = f.values();
  for (double& v : values) v = -v;
  return StepFunction(f.domain(), f.jumps(), std::move(values));
}

// base + lift * 1[a, b) where [a, b) lies strictly inside one stretch.
StepFunction add_plateau(const StepFunction& base, double a, double b, double lift) {
  std::vector<double> jumps, values;
  values.push_back(base.values()[0]);
  std::size_t i = 0;
  auto push = [&](double j, double v) {
    jumps.push_back(j);
    values.push_back(v);
  };
  bool inserted = false;
  for (; i < base.jumps().size() && base.jumps()[i] < a; ++i)
    push(base.jumps()[i], base.values()[i + 1]);
  double stretch_value = values.back();
  push(a, stretch_value + lift);
  push(b, stretch_value);
  (void)inserted;
  for (; i < base.jumps().size(); ++i) push(base.jumps()[i], base.values()[i + 1]);
  return StepFunction(base.domain(), std::move(jumps), std::move(values));
}

}  // namespace

ReplicationResult run_replications(std::uint64_t master_seed, std::size_t count,
                                   int threads,
                                   const std::function<double(std::size_t, Rng&)>& task) {
  if (count < 1) throw std::invalid_argument("run_replications: count must be >= 1");
  std::vector<double> slots(count, std::numeric_limits<double>::quiet_NaN());
  std::vector<char> ok(count, 0);
  parallel_for(count, threads, [&](std::size_t r) {
    Rng rng(mix_seed(master_seed, r));
    try {
      slots[r] = task(r, rng);
      ok[r] = 1;
    } catch (const std::exception&) {
      ok[r] = 0;
    }
  });
  ReplicationResult out;
  out.samples.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    if (ok[r])
      out.samples.push_back(slots[r]);
    else
      out.failures.push_back(r);
  }
  if (100 * out.failures.size() > count)
    throw std::runtime_error("run_replications: more than 1% of replications failed");
  return out;
}

CounterexamplePath counterexample_trial(double rate,
                                        const std::vector<std::size_t>& n_values,
                                        Rng& rng) {
  if (!(rate > 0.0)) throw std::invalid_argument("counterexample_trial: rate must be > 0");
  if (n_values.empty())
    throw std::invalid_argument("counterexample_trial: need at least one n");
  PoissonPath p = sample_two_sided_poisson(rate, rng);
  StepFunction psi = counting_path(p);
  StepFunction base = negate(psi);  // maximal flat [T_-1, T_1]

  CounterexamplePath out;
  out.t_neg1 = -p.left.front();
  out.t_pos1 = p.right.front();

  StepFunction base_jump = pure_jump_of(base).to_step();
  for (std::size_t n : n_values) {
    double lift = 1.0 / static_cast<double>(n);
    StepFunction perturbed =
        add_plateau(base, 0.5 * out.t_neg1, 0.5 * out.t_pos1, lift);
    CounterexampleRecord rec;
    rec.n = n;
    rec.sargmax_perturbed = smallest_argmax(perturbed);
    rec.largmax_perturbed = largest_argmax(perturbed);
    rec.sargmax_base = smallest_argmax(base);
    rec.largmax_base = largest_argmax(base);
    rec.half_relation_exact = rec.sargmax_perturbed == 0.5 * rec.sargmax_base &&
                              rec.largmax_perturbed == 0.5 * rec.largmax_base;
    rec.dist = skorohod_distance(perturbed, base);
    rec.dist_bound_ok = rec.dist <= lift * (1.0 + 1e-9);
    rec.pure_jump_dist =
        skorohod_distance(pure_jump_of(perturbed).to_step(), base_jump);
    out.all_exact = out.all_exact && rec.half_relation_exact;
    out.pure_jump_separated = out.pure_jump_separated && rec.pure_jump_dist >= 0.5;
    out.records.push_back(rec);
  }
  return out;
}

CounterexampleReport run_counterexample(double rate,
                                        const std::vector<std::size_t>& n_values,
                                        std::uint64_t master_seed, std::size_t paths,
                                        int threads) {
  CounterexampleReport report;
  report.paths.resize(paths);
  parallel_for(paths, threads, [&](std::size_t r) {
    Rng rng(mix_seed(master_seed, r));
    report.paths[r] = counterexample_trial(rate, n_values, rng);
  });
  for (const CounterexamplePath& path : report.paths) {
    report.all_exact = report.all_exact && path.all_exact;
    report.all_pure_jump_separated =
        report.all_pure_jump_separated && path.pure_jump_separated;
    for (const CounterexampleRecord& rec : path.records)
      report.all_dist_bounds = report.all_dist_bounds && rec.dist_bound_ok;
  }
  return report;
}

ConvergenceSuiteReport convergence_suite(const std::vector<std::size_t>& n_ladder) {
  const Rect rect({Interval(-2.0, 2.0), Interval(-1.0, 1.0)});
  auto quad = [](double c, double w) {
    QuadraticSection q;
    q.c = c;
    q.w = {w};
    q.m = {{1.0}};
    return Section(q);
  };
  // Sups: 0.245, 1.125, 0.52 -- strictly ordered, middle stretch wins.
  auto base_sections = [&](double shift) {
    return std::vector<Section>{quad(0.2 + shift, 0.3), quad(1.0 + shift, 0.5),
                                quad(0.5 + shift, -0.2)};
  };
  PiecewiseProcess psi0(rect, {-1.0}, {0.5}, base_sections(0.0));
  const Point s0 = smallest_argmax(psi0);
  const Point l0 = largest_argmax(psi0);

  ConvergenceSuiteReport report;
  report.positive_rate_constant = 0.0;
  report.negative_min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t n : n_ladder) {
    const double eps = 1.0 / static_cast<double>(n);
    PiecewiseProcess psin(rect, {-1.0 - eps}, {0.5 + eps}, base_sections(eps));
    ConvergenceCase c;
    c.n = n;
    c.tilde_dist = tilde_distance(psin, psi0).upper_bound;
    c.pure_jump_dist = skorohod_distance(pure_jump_of(psin).to_step(),
                                         pure_jump_of(psi0).to_step());
    Point sn = smallest_argmax(psin), ln = largest_argmax(psin);
    double serr = 0.0, lerr = 0.0;
    for (std::size_t k = 0; k < sn.size(); ++k) {
      serr = std::max(serr, std::abs(sn[k] - s0[k]));
      lerr = std::max(lerr, std::abs(ln[k] - l0[k]));
    }
    c.sargmax_err = serr;
    c.largmax_err = lerr;
    report.positive.push_back(c);
    report.positive_rate_constant =
        std::max(report.positive_rate_constant,
                 static_cast<double>(n) * std::max(serr, lerr));

    // Negative control: same limit in every distance except the pure jump
    // record, because of a vanishing lift over [-0.3, 0.2) inside the winning
    // stretch. The smallest argmax pins to the lift, away from s0.
    std::vector<Section> lifted = base_sections(0.0);
    QuadraticSection mid = std::get<QuadraticSection>(lifted[1]);
    QuadraticSection raised = mid;
    raised.c += eps;
    std::vector<Section> neg_sections{lifted[0], mid, raised, mid, lifted[2]};
    PiecewiseProcess negctl(rect, {-1.0, -0.3}, {0.2, 0.5}, neg_sections);
    ConvergenceCase nc;
    nc.n = n;
    nc.tilde_dist = tilde_distance(negctl, psi0).upper_bound;
    nc.pure_jump_dist = skorohod_distance(pure_jump_of(negctl).to_step(),
                                          pure_jump_of(psi0).to_step());
    Point sneg = smallest_argmax(negctl);
    nc.sargmax_err = std::abs(sneg[0] - s0[0]);
    nc.largmax_err = std::abs(largest_argmax(negctl)[0] - l0[0]);
    report.negative.push_back(nc);
    report.negative_min_gap = std::min(report.negative_min_gap, nc.sargmax_err);
  }
  return report;
}

CpConvergenceResult changepoint_convergence(const CpConvergenceConfig& config) {
  config.model.validate();
  CpConvergenceResult result;
  result.ns = config.ns;

  for (std::size_t k = 0; k < config.ns.size(); ++k) {
    const std::size_t n = config.ns[k];
    ReplicationResult reps = run_replications(
        mix_seed(config.master_seed, k), config.replications, config.threads,
        [&](std::size_t, Rng& rng) {
          Dataset data = simulate_changepoint(config.model, n, rng);
          CpEstimate est = fit_changepoint(data, config.model.c1, config.model.c2);
          return static_cast<double>(n) * (est.zeta_hat - config.model.zeta0);
        });
    result.samples.push_back(std::move(reps.samples));
    result.failures.push_back(reps.failures.size());
  }

  CompoundPoissonSpec limit = derive_changepoint_limit(config.model);
  ReplicationResult oracle = run_replications(
      mix_seed(config.master_seed, 0xA11CEULL), config.oracle_draws, config.threads,
      [&](std::size_t, Rng& rng) {
        return argmax_of_compound_poisson(limit, rng, config.initial_horizon,
                                          config.buffer_frac)
            .sargmax_t;
      });
  result.oracle = std::move(oracle.samples);
  result.oracle_failures = oracle.failures.size();

  Ecdf oracle_ecdf(result.oracle);
  for (const auto& samples : result.samples)
    result.ks.push_back(ks_distance(Ecdf(samples), oracle_ecdf));
  return result;
}

}  // namespace smx
