#include <doctest.h>

#include <cmath>

#include "smx/argmax.hpp"
#include "smx/changepoint.hpp"
#include "smx/rng.hpp"

using namespace smx;

namespace {

// Straightforward profile enumeration, independent of fit_changepoint.
CpEstimate brute_force_fit(const Dataset& data, double c1, double c2) {
  std::vector<double> candidates{c1};
  for (std::size_t k = 0; k < data.size(); ++k) {
    double zv = data.z()[data.order()[k]];
    if (zv >= c1 && zv <= c2 && zv != c1) candidates.push_back(zv);
  }
  std::sort(candidates.begin(), candidates.end());
  CpEstimate best;
  bool have = false;
  for (double zeta : candidates) {
    double sl = 0.0, sr = 0.0;
    std::size_t nl = 0, nr = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (data.z()[i] <= zeta) {
        sl += data.y()[i];
        ++nl;
      } else {
        sr += data.y()[i];
        ++nr;
      }
    }
    double overall = (sl + sr) / static_cast<double>(data.size());
    double a = nl ? sl / static_cast<double>(nl) : overall;
    double b = nr ? sr / static_cast<double>(nr) : overall;
    double acc = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      double r = data.y()[i] - (data.z()[i] <= zeta ? a : b);
      acc += r * r;
    }
    double value = -acc / static_cast<double>(data.size());
    if (!have || value > best.objective_value) {
      have = true;
      best = CpEstimate{zeta, a, b, value};
    }
  }
  return best;
}

Dataset four_points() {
  return Dataset({0.0, 0.0, 1.0, 1.0}, {0.1, 0.4, 0.6, 0.9});
}

}  // namespace

TEST_CASE("simulation respects the model") {
  ChangePointModel model;
  model.eps_law = ErrorLaw::normal(0.0);
  Rng rng(11);
  Dataset d = simulate_changepoint(model, 200, rng);
  for (std::size_t i = 0; i < d.size(); ++i) {
    double want = d.z()[i] <= model.zeta0 ? model.alpha0 : model.beta0;
    CHECK(d.y()[i] == want);
  }
  Rng rng2(12);
  Dataset two = simulate_changepoint(model, 2, rng2);
  CHECK(two.size() == 2);

  ChangePointModel noisy;
  double sum = 0.0;
  std::size_t count = 0;
  const int reps = 400;
  for (int r = 0; r < reps; ++r) {
    Rng rr(mix_seed(9, static_cast<std::uint64_t>(r)));
    Dataset dd = simulate_changepoint(noisy, 50, rr);
    for (std::size_t i = 0; i < dd.size(); ++i) {
      if (dd.z()[i] <= noisy.zeta0) {
        sum += dd.y()[i];
        ++count;
      }
    }
  }
  double se = noisy.eps_law.sigma / std::sqrt(static_cast<double>(count));
  CHECK(std::abs(sum / static_cast<double>(count) - noisy.alpha0) <= 4.0 * se);
}

TEST_CASE("objective examples") {
  Dataset d = four_points();
  CHECK(least_squares_objective(d, 0.5, 0.0, 1.0) == 0.0);

  // alpha == beta: the split cannot matter.
  double v1 = least_squares_objective(d, 0.2, 0.7, 0.7);
  double v2 = least_squares_objective(d, 0.8, 0.7, 0.7);
  CHECK(v1 == v2);

  // Piecewise constant between order statistics.
  CHECK(least_squares_objective(d, 0.45, 0.3, 0.9) ==
        least_squares_objective(d, 0.55, 0.3, 0.9));
}

TEST_CASE("profile fit on the four-point dataset") {
  CpEstimate est = fit_changepoint(four_points(), 0.05, 0.95);
  CHECK(est.zeta_hat == 0.4);
  CHECK(est.alpha_hat == 0.0);
  CHECK(est.beta_hat == 1.0);
  CHECK(est.objective_value == 0.0);
}

TEST_CASE("noiseless fit recovers the straddling order statistic") {
  ChangePointModel model;
  model.eps_law = ErrorLaw::normal(0.0);
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng(mix_seed(404, static_cast<std::uint64_t>(trial)));
    Dataset d = simulate_changepoint(model, 60, rng);
    CpEstimate est = fit_changepoint(d, model.c1, model.c2);
    double best_below = model.c1;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d.z()[i] <= model.zeta0 && d.z()[i] >= model.c1)
        best_below = std::max(best_below, d.z()[i]);
    CHECK(est.zeta_hat == best_below);
    CHECK(est.objective_value == 0.0);
  }
}

TEST_CASE("fit matches brute-force enumeration exactly") {
  ChangePointModel model;
  for (int trial = 0; trial < 300; ++trial) {
    Rng rng(mix_seed(20260301, static_cast<std::uint64_t>(trial)));
    std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 49.0);
    Dataset d = simulate_changepoint(model, n, rng);
    CpEstimate mine = fit_changepoint(d, model.c1, model.c2);
    CpEstimate ref = brute_force_fit(d, model.c1, model.c2);
    CHECK(mine.zeta_hat == ref.zeta_hat);
    CHECK(std::abs(mine.objective_value - ref.objective_value) <= 1e-12);
    // Profile identity: reported objective equals the direct evaluation.
    CHECK(mine.objective_value ==
          least_squares_objective(d, mine.zeta_hat, mine.alpha_hat, mine.beta_hat));
    CHECK(mine.zeta_hat >= model.c1);
    CHECK(mine.zeta_hat <= model.c2);
  }
}

TEST_CASE("localized process matches direct evaluation") {
  ChangePointModel model;
  Rng rng(515);
  const std::size_t n = 400;
  Dataset d = simulate_changepoint(model, n, rng);
  Theta0 theta0{model.zeta0, model.alpha0, model.beta0};
  Rect window({Interval(-20.0, 20.0), Interval(-10.0, 10.0), Interval(-10.0, 10.0)});
  auto [process, jumps] = localized_process(d, theta0, window, model.c1, model.c2);

  // Value at h = 0 vanishes.
  CHECK(process(0.0, {0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));

  // Jump locations are exactly n (z_i - zeta0) for windowed observations.
  std::vector<double> expect;
  for (std::size_t i = 0; i < n; ++i) {
    double h1 = static_cast<double>(n) * (d.z()[i] - model.zeta0);
    if (h1 > -20.0 && h1 < 20.0 && h1 != 0.0) expect.push_back(h1);
  }
  std::sort(expect.begin(), expect.end());
  CHECK(process.all_jumps() == expect);
  std::vector<double> stored = jumps.jumps_neg();
  stored.insert(stored.end(), jumps.jumps_pos().begin(), jumps.jumps_pos().end());
  CHECK(stored == expect);

  // Independent direct evaluation of the rescaled objective.
  const double rn = std::sqrt(static_cast<double>(n));
  auto direct = [&](double h1, double h2, double h3) {
    double zeta = model.zeta0 + h1 / static_cast<double>(n);
    double alpha = model.alpha0 + h2 / rn, beta = model.beta0 + h3 / rn;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double rt = d.y()[i] - (d.z()[i] <= zeta ? alpha : beta);
      double r0 = d.y()[i] - (d.z()[i] <= model.zeta0 ? model.alpha0 : model.beta0);
      acc += -rt * rt + r0 * r0;
    }
    return acc;
  };
  Rng hr(99);
  for (int k = 0; k < 100; ++k) {
    double h1 = hr.uniform(-19.9, 19.9);
    double h2 = hr.uniform(-9.9, 9.9);
    double h3 = hr.uniform(-9.9, 9.9);
    CHECK(process(h1, {h2, h3}) == doctest::Approx(direct(h1, h2, h3)).epsilon(1e-9));
  }
}

TEST_CASE("localized argmax recovers the rescaled estimation error") {
  ChangePointModel model;
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng(mix_seed(7777, static_cast<std::uint64_t>(trial)));
    const std::size_t n = 300;
    Dataset d = simulate_changepoint(model, n, rng);
    CpEstimate est = fit_changepoint(d, model.c1, model.c2);
    const double rn = std::sqrt(static_cast<double>(n));
    double h1 = static_cast<double>(n) * (est.zeta_hat - model.zeta0);
    double h2 = rn * (est.alpha_hat - model.alpha0);
    double h3 = rn * (est.beta_hat - model.beta0);
    if (std::abs(h1) >= 19.0 || std::abs(h2) >= 9.0 || std::abs(h3) >= 9.0) continue;
    Rect window({Interval(-20.0, 20.0), Interval(-10.0, 10.0), Interval(-10.0, 10.0)});
    Theta0 theta0{model.zeta0, model.alpha0, model.beta0};
    auto [process, jumps] = localized_process(d, theta0, window, model.c1, model.c2);
    Point s = smallest_argmax(process);
    CHECK(s[0] == doctest::Approx(h1).epsilon(1e-9));
    CHECK(s[1] == doctest::Approx(h2).epsilon(1e-7));
    CHECK(s[2] == doctest::Approx(h3).epsilon(1e-7));
    ++checked;
  }
  CHECK(checked >= 15);
}

TEST_CASE("dataset rejects ties and empty input") {
  CHECK_THROWS_AS(Dataset({1.0, 2.0}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Dataset({}, {}), std::invalid_argument);
}
