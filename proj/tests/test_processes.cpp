#include <doctest.h>

#include <cmath>

#include "smx/argmax.hpp"
#include "smx/processes.hpp"
#include "smx/stats.hpp"

using namespace smx;

namespace {

CompoundPoissonSpec unit_negative_spec() {
  return CompoundPoissonSpec(1.0, 1.0, JumpLaw::point_mass(-1.0),
                             JumpLaw::point_mass(-1.0));
}

}  // namespace

TEST_CASE("compound poisson path anchors zero on the central stretch") {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    StepFunction q = sample_compound_poisson(unit_negative_spec(), 5.0, rng);
    CHECK(q(0.0) == 0.0);
    // Nonincreasing away from zero: in storage order the left side climbs
    // toward the central zero stretch and the right side falls away from it.
    std::size_t zero_idx = q.stretch_index(0.0);
    for (std::size_t i = 0; i + 1 < q.values().size(); ++i) {
      if (i + 1 <= zero_idx) CHECK(q.values()[i] <= q.values()[i + 1]);
      if (i >= zero_idx) CHECK(q.values()[i] >= q.values()[i + 1]);
    }
    PureJumpFunction pj = pure_jump_of(q);
    CHECK(pj(0.0) == 0.0);
  }
}

TEST_CASE("negative mean jump laws are required") {
  CHECK_THROWS_AS(CompoundPoissonSpec(1.0, 1.0, JumpLaw::point_mass(0.5),
                                      JumpLaw::point_mass(-1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(CompoundPoissonSpec(1.0, 1.0, JumpLaw::normal(0.1, 1.0),
                                      JumpLaw::normal(-1.0, 1.0)),
                  std::invalid_argument);
  CHECK_NOTHROW(CompoundPoissonSpec(2.0, 0.5, JumpLaw::normal(-0.3, 1.0),
                                    JumpLaw::shifted(1.0, 2.0, ErrorLaw::normal(0.5))));
}

TEST_CASE("poisson event counts match the rate") {
  const double horizon = 4.0;
  const int reps = 10000;
  double total = 0.0;
  std::vector<double> counts(40, 0.0);
  for (int r = 0; r < reps; ++r) {
    Rng rng(mix_seed(5150, static_cast<std::uint64_t>(r)));
    StepFunction q = sample_compound_poisson(unit_negative_spec(), horizon, rng);
    std::size_t pos = 0;
    for (double j : q.jumps())
      if (j > 0.0) ++pos;
    total += static_cast<double>(pos);
    if (pos < counts.size()) counts[pos] += 1.0;
  }
  double mean = total / reps;
  double se = std::sqrt(1.0 * horizon / reps);
  CHECK(std::abs(mean - 1.0 * horizon) <= 3.0 * se);

  // Chi-square goodness of fit against Poisson(rate * horizon), tail-merged.
  double lambda = 1.0 * horizon;
  int kmax = 12;
  std::vector<double> expected(kmax + 2, 0.0);
  double p = std::exp(-lambda), cum = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    expected[k] = reps * p;
    cum += p;
    p *= lambda / (k + 1);
  }
  expected[kmax + 1] = reps * (1.0 - cum);
  std::vector<double> observed(kmax + 2, 0.0);
  for (int k = 0; k <= kmax && k < static_cast<int>(counts.size()); ++k)
    observed[k] = counts[k];
  double seen = 0.0;
  for (int k = 0; k <= kmax; ++k) seen += observed[k];
  observed[kmax + 1] = reps - seen;
  double chi2 = 0.0;
  for (int k = 0; k < kmax + 2; ++k)
    if (expected[k] > 1e-9) chi2 += (observed[k] - expected[k]) * (observed[k] - expected[k]) / expected[k];
  CHECK(chi_square_upper_tail(kmax + 1, chi2) > 0.001);
}

TEST_CASE("limit process shares the gaussian part across stretches") {
  CompoundPoissonSpec q(1.0, 1.0, JumpLaw::normal(-1.0, 1.0), JumpLaw::normal(-1.0, 1.0));
  LimitProcessSpec spec(q, Mat{{1.0}}, Mat{{1.0}});
  Rect rect({Interval(-6.0, 6.0), Interval(-8.0, 8.0)});
  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    PiecewiseProcess psi = sample_limit_process(spec, rect, rng);
    const auto& first = std::get<QuadraticSection>(psi.sections()[0]);
    StepFunction q_path(rect.k1(), psi.all_jumps(), [&] {
      std::vector<double> consts;
      for (const Section& s : psi.sections())
        consts.push_back(std::get<QuadraticSection>(s).c);
      return consts;
    }());
    for (const Section& s : psi.sections()) {
      const auto& qs = std::get<QuadraticSection>(s);
      CHECK(qs.w == first.w);
      CHECK(qs.m == first.m);
    }
    // Separability: the t coordinate of the argmax equals the argmax of the
    // constants alone, and the K2 coordinate solves I xi = w when interior.
    Point s = smallest_argmax(psi);
    CHECK(s[0] == smallest_argmax(q_path));
    double xi_star = first.w[0] / first.m[0][0];
    if (std::abs(xi_star) < 7.9) CHECK(s[1] == doctest::Approx(xi_star).epsilon(1e-12));
  }
}

TEST_CASE("adaptive argmax of a point-mass path returns the innermost events") {
  Rng rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    Rng local(rng.next_u64());
    AdaptiveArgmax a = argmax_of_compound_poisson(unit_negative_spec(), local, 8.0, 0.1);
    CHECK(a.sargmax_t < 0.0);
    CHECK(a.largmax_t > 0.0);
    CHECK(a.sargmax_t >= -(1.0 - 0.1) * a.horizon);
    CHECK(a.largmax_t <= (1.0 - 0.1) * a.horizon);
  }
}

TEST_CASE("adaptive argmax is invariant to the initial horizon at fixed seeds") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng r1(mix_seed(31337, seed)), r2(mix_seed(31337, seed));
    AdaptiveArgmax a = argmax_of_compound_poisson(unit_negative_spec(), r1, 1.0, 0.1);
    AdaptiveArgmax b = argmax_of_compound_poisson(unit_negative_spec(), r2, 4.0, 0.1);
    CHECK(a.sargmax_t == b.sargmax_t);
    CHECK(a.largmax_t == b.largmax_t);
  }
}

TEST_CASE("derived change-point limit") {
  ChangePointModel model;  // zeta0 .5, alpha 0, beta 1, sigma .5, Z uniform(0,1)
  CompoundPoissonSpec spec = derive_changepoint_limit(model);
  CHECK(spec.rate_pos == doctest::Approx(1.0));
  CHECK(spec.rate_neg == doctest::Approx(1.0));
  CHECK(spec.law_pos.mean() == doctest::Approx(-1.0));
  CHECK(spec.law_neg.mean() == doctest::Approx(-1.0));
  CHECK(spec.law_pos.kind == JumpLaw::Kind::kShifted);

  // law_pos draws -(1 + 2 eps): mean -1, sd 2 sigma = 1.
  Rng rng(5);
  double sum = 0.0, sum2 = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double v = spec.law_pos.sample(rng);
    sum += v;
    sum2 += v * v;
  }
  CHECK(sum / n == doctest::Approx(-1.0).epsilon(0.02));
  CHECK(sum2 / n - (sum / n) * (sum / n) == doctest::Approx(1.0).epsilon(0.03));

  ChangePointModel noiseless = model;
  noiseless.eps_law = ErrorLaw::normal(0.0);
  CompoundPoissonSpec pm = derive_changepoint_limit(noiseless);
  CHECK(pm.law_pos.kind == JumpLaw::Kind::kPointMass);
  CHECK(pm.law_pos.mean() == -1.0);
}
