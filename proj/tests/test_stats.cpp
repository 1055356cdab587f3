#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "smx/rng.hpp"
#include "smx/stats.hpp"

using namespace smx;

TEST_CASE("normal quantile against pinned values") {
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(normal_quantile(0.001) == doctest::Approx(-3.090232306167813).epsilon(1e-12));
  for (double p : {1e-8, 0.01, 0.3, 0.5, 0.77, 0.999, 1.0 - 1e-9}) {
    CHECK(normal_cdf(normal_quantile(p)) == doctest::Approx(p).epsilon(1e-11));
  }
  CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
}

TEST_CASE("incomplete gamma and chi-square tails") {
  // Chi-square with 2 degrees of freedom has an explicit tail.
  for (double x : {0.5, 1.0, 3.0, 10.0}) {
    CHECK(chi_square_upper_tail(2.0, x) == doctest::Approx(std::exp(-0.5 * x)).epsilon(1e-12));
  }
  // 0.001 upper quantile of chi-square with 9 degrees of freedom.
  CHECK(chi_square_upper_tail(9.0, 27.877164) == doctest::Approx(0.001).epsilon(1e-4));
  CHECK(gamma_p(1.5, 0.0) == 0.0);
  CHECK(gamma_p(1.5, 200.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ecdf evaluation") {
  Ecdf f({1.0, 2.0, 3.0});
  CHECK(f(2.0) == doctest::Approx(2.0 / 3.0));
  CHECK(f(0.5) == 0.0);
  CHECK(f(3.0) == 1.0);
  Ecdf atom({5.0});
  CHECK(atom(4.9) == 0.0);
  CHECK(atom(5.0) == 1.0);
  Ecdf dup({1.0, 1.0});
  CHECK(dup(1.0) == 1.0);
  CHECK_THROWS_AS(Ecdf({}), std::invalid_argument);
}

TEST_CASE("ks distance examples and metric properties") {
  CHECK(ks_distance(Ecdf({1.0, 2.0}), Ecdf({1.0, 2.0})) == 0.0);
  CHECK(ks_distance(Ecdf({0.0}), Ecdf({1.0})) == 1.0);
  CHECK(ks_distance(Ecdf({0.0, 1.0}), Ecdf({0.5})) == doctest::Approx(0.5));

  Rng rng(88);
  for (int trial = 0; trial < 50; ++trial) {
    auto draw = [&](int n) {
      std::vector<double> s;
      for (int i = 0; i < n; ++i) s.push_back(rng.normal());
      return Ecdf(s);
    };
    Ecdf a = draw(13), b = draw(7), c = draw(21);
    CHECK(ks_distance(a, b) == ks_distance(b, a));
    CHECK(ks_distance(a, c) <= ks_distance(a, b) + ks_distance(b, c) + 1e-15);
    CHECK(ks_distance(a, a) == 0.0);
  }
}

TEST_CASE("sample quantiles") {
  std::vector<double> s{1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(quantile(s, 0.5) == 3.0);
  CHECK(quantile(s, 0.0) == 1.0);
  CHECK(quantile(s, 1.0) == 5.0);
  CHECK(quantile(s, 0.25) == 2.0);
  CHECK(quantile(s, 0.1) == doctest::Approx(1.4));
}

TEST_CASE("rng determinism and moments") {
  Rng a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 100; ++i) {
    double x = a.normal(), y = b.normal(), z = c.normal();
    all_equal = all_equal && (x == y);
    any_diff = any_diff || (x != z);
  }
  CHECK(all_equal);
  CHECK(any_diff);

  Rng r(7);
  double sum = 0.0, sum2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double x = r.normal();
    sum += x;
    sum2 += x * x;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.01));

  double esum = 0.0;
  for (int i = 0; i < n; ++i) esum += r.exponential(2.0);
  CHECK(esum / n == doctest::Approx(0.5).epsilon(0.02));

  double gsum = 0.0;
  for (int i = 0; i < n / 10; ++i) gsum += r.gamma(2.5);
  CHECK(gsum / (n / 10) == doctest::Approx(2.5).epsilon(0.05));
}

TEST_CASE("seed mixing separates replications") {
  CHECK(mix_seed(1, 2) != mix_seed(1, 3));
  CHECK(mix_seed(1, 2) != mix_seed(2, 2));
  CHECK(mix_seed(123, 45) == mix_seed(123, 45));
}
