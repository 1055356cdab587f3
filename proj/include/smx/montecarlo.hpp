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

#ifndef SMX_MONTECARLO_HPP_
#define SMX_MONTECARLO_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "smx/changepoint.hpp"
#include "smx/processes.hpp"
#include "smx/rng.hpp"
#include "smx/stats.hpp"

namespace smx {

struct ReplicationResult {
  std::vector<double> samples;        // successful draws in replication order
  std::vector<std::size_t> failures;  // indices of failed replications
};

/// Runs `count` independent replications of `task`; replication r draws from
/// Rng(mix_seed(master_seed, r)), so results are bitwise independent of the
/// schedule and the worker count. Throws when more than 1% of replications
/// fail.
ReplicationResult run_replications(std::uint64_t master_seed, std::size_t count,
                                   int threads,
                                   const std::function<double(std::size_t, Rng&)>& task);

struct CounterexampleRecord {
  std::size_t n = 0;
  double sargmax_perturbed = 0.0, largmax_perturbed = 0.0;
  double sargmax_base = 0.0, largmax_base = 0.0;
  double dist = 0.0;            // Skorohod distance between the two paths
  double pure_jump_dist = 0.0;  // distance between their pure jump functions
  bool half_relation_exact = false;
  bool dist_bound_ok = false;  // dist <= 1/n (tiny float slack)
};

struct CounterexamplePath {
  double t_neg1 = 0.0, t_pos1 = 0.0;  // first event on each side of zero
  std::vector<CounterexampleRecord> records;
  bool all_exact = true;
  bool pure_jump_separated = true;  // pure jump distance stayed >= 1/2 for every n
};

/// One seeded path of the perturbed-argmax construction: a two-sided Poisson
/// counting path psi gives the base path psi0 = -psi, whose maximizing flat
/// is [T_-1, T_1]; adding a 1/n lift on [T_-1/2, T_1/2) moves both argmax
/// functionals to exactly half their base values while the paths converge in
/// the Skorohod metric and the pure jump functions stay one apart.
CounterexamplePath counterexample_trial(double rate,
                                        const std::vector<std::size_t>& n_values,
                                        Rng& rng);

struct CounterexampleReport {
  std::vector<CounterexamplePath> paths;
  bool all_exact = true;
  bool all_dist_bounds = true;
  bool all_pure_jump_separated = true;
};

CounterexampleReport run_counterexample(double rate,
                                        const std::vector<std::size_t>& n_values,
                                        std::uint64_t master_seed, std::size_t paths,
                                        int threads);

struct ConvergenceCase {
  std::size_t n = 0;
  double tilde_dist = 0.0;
  double pure_jump_dist = 0.0;
  double sargmax_err = 0.0;
  double largmax_err = 0.0;
};

struct ConvergenceSuiteReport {
  // Positive case: jump locations and section constants perturbed by 1/n.
  std::vector<ConvergenceCase> positive;
  double positive_rate_constant = 0.0;  // max over the ladder of n * error
  // Negative control: a vanishing lift between two extra jumps; distances
  // still vanish but the pure jump functions do not converge.
  std::vector<ConvergenceCase> negative;
  double negative_min_gap = 0.0;  // min over the ladder of the sargmax gap
};

/// Deterministic convergence suite on K = [-2,2] x [-1,1] with jumps at
/// {-1, 0.5} and three concave quadratic sections with strictly ordered sups.
ConvergenceSuiteReport convergence_suite(const std::vector<std::size_t>& n_ladder);

struct CpConvergenceConfig {
  ChangePointModel model;
  std::vector<std::size_t> ns{250, 1000, 4000};
  std::size_t replications = 2000;
  std::size_t oracle_draws = 20000;
  std::uint64_t master_seed = 20260100;
  int threads = 1;
  double initial_horizon = 8.0;
  double buffer_frac = 0.1;
};

struct CpConvergenceResult {
  std::vector<std::size_t> ns;
  std::vector<std::vector<double>> samples;  // per n: n * (zeta_hat - zeta0)
  std::vector<double> oracle;                // argmax draws of the derived limit
  std::vector<double> ks;                    // per n, against the oracle ECDF
  std::vector<std::size_t> failures;         // per n
  std::size_t oracle_failures = 0;
};

/// Monte Carlo comparison of the rescaled change-point estimation error
/// against the smallest argmax of the derived compound Poisson limit.
CpConvergenceResult changepoint_convergence(const CpConvergenceConfig& config);

}  // namespace smx

#endif  // SMX_MONTECARLO_HPP_
