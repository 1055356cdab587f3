#include <doctest.h>

#include <cmath>

#include "smx/montecarlo.hpp"

using namespace smx;

TEST_CASE("replication runner is deterministic and order-canonical") {
  auto task = [](std::size_t, Rng& rng) { return rng.normal(); };
  ReplicationResult a = run_replications(99, 64, 1, task);
  ReplicationResult b = run_replications(99, 64, 4, task);
  CHECK(a.samples == b.samples);
  CHECK(a.failures.empty());

  ReplicationResult one = run_replications(99, 1, 1, task);
  CHECK(one.samples.size() == 1);

  auto failing = [](std::size_t r, Rng&) {
    if (r % 3 == 0) throw std::runtime_error("boom");
    return 1.0;
  };
  CHECK_THROWS_AS(run_replications(1, 30, 2, failing), std::runtime_error);
}

TEST_CASE("counterexample path: exact halving, vanishing distance") {
  Rng rng(314159);
  for (int trial = 0; trial < 10; ++trial) {
    Rng local(rng.next_u64());
    CounterexamplePath path = counterexample_trial(1.0, {10, 100, 1000}, local);
    CHECK(path.t_neg1 < 0.0);
    CHECK(path.t_pos1 > 0.0);
    CHECK(path.all_exact);
    CHECK(path.pure_jump_separated);
    for (const CounterexampleRecord& rec : path.records) {
      CHECK(rec.sargmax_perturbed == 0.5 * rec.sargmax_base);
      CHECK(rec.largmax_perturbed == 0.5 * rec.largmax_base);
      CHECK(rec.sargmax_base == path.t_neg1);
      CHECK(rec.largmax_base == path.t_pos1);
      CHECK(rec.dist <= 1.0 / static_cast<double>(rec.n) * (1.0 + 1e-9));
      CHECK(rec.pure_jump_dist == 1.0);
    }
  }
}

TEST_CASE("counterexample aggregation") {
  CounterexampleReport report = run_counterexample(1.0, {10, 100}, 2024, 20, 2);
  CHECK(report.paths.size() == 20);
  CHECK(report.all_exact);
  CHECK(report.all_dist_bounds);
  CHECK(report.all_pure_jump_separated);
}

TEST_CASE("deterministic convergence suite") {
  ConvergenceSuiteReport r = convergence_suite({10, 100, 1000});
  REQUIRE(r.positive.size() == 3);
  double prev = std::numeric_limits<double>::infinity();
  for (const ConvergenceCase& c : r.positive) {
    CHECK(c.tilde_dist <= prev + 1e-12);
    prev = c.tilde_dist;
    CHECK(c.sargmax_err <= r.positive_rate_constant / static_cast<double>(c.n) + 1e-12);
    CHECK(c.pure_jump_dist <= 3.0 / static_cast<double>(c.n));
  }
  CHECK(r.positive.back().sargmax_err <= 5e-3);
  CHECK(r.positive_rate_constant <= 2.0);

  for (const ConvergenceCase& c : r.negative) {
    CHECK(c.tilde_dist <= 1.5 / static_cast<double>(c.n));
    CHECK(c.pure_jump_dist >= 0.5);  // jump records stay apart
    CHECK(c.sargmax_err > 0.1);
  }
  CHECK(r.negative_min_gap > 0.1);
}

TEST_CASE("changepoint convergence smoke run") {
  CpConvergenceConfig config;
  config.ns = {120};
  config.replications = 150;
  config.oracle_draws = 400;
  config.threads = 2;
  CpConvergenceResult res = changepoint_convergence(config);
  REQUIRE(res.ks.size() == 1);
  CHECK(res.ks[0] < 0.35);
  CHECK(res.failures[0] == 0);
  CHECK(res.oracle_failures == 0);
  CHECK(res.samples[0].size() == 150);

  CpConvergenceResult res2 = changepoint_convergence(config);
  CHECK(res.samples[0] == res2.samples[0]);
  CHECK(res.oracle == res2.oracle);
}
