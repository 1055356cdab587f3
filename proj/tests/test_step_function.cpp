#include <doctest.h>

#include "smx/process.hpp"
#include "smx/step_function.hpp"

using namespace smx;

TEST_CASE("cadlag evaluation and stretch lookup") {
  StepFunction f(Interval(-2.0, 2.0), {1.0}, {0.0, 5.0});
  CHECK(f(0.9) == 0.0);
  CHECK(f(1.0) == 5.0);  // right continuity at the jump
  CHECK(f(2.0) == 5.0);
  CHECK_THROWS_AS(f(2.5), std::domain_error);

  StepFunction c(Interval(0.0, 1.0), 3.0);
  CHECK(c(0.0) == 3.0);
  CHECK(c(0.7) == 3.0);
}

TEST_CASE("construction rejects bad jumps") {
  CHECK_THROWS_AS(StepFunction(Interval(0.0, 1.0), {0.0}, {1.0, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StepFunction(Interval(0.0, 1.0), {1.0}, {1.0, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StepFunction(Interval(0.0, 1.0), {0.5, 0.5}, {1.0, 2.0, 3.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StepFunction(Interval(0.0, 1.0), {0.5}, {1.0}),
                  std::invalid_argument);
}

TEST_CASE("quadrant limits") {
  StepFunction f(Interval(0.0, 2.0), {1.0}, {0.0, 5.0});
  auto [l1, r1] = f.quadrant_limits(1.0);
  CHECK(l1 == 0.0);
  CHECK(r1 == 5.0);
  auto [l2, r2] = f.quadrant_limits(0.5);
  CHECK(l2 == 0.0);
  CHECK(r2 == 0.0);
  StepFunction c(Interval(0.0, 2.0), 7.0);
  auto [l3, r3] = c.quadrant_limits(1.3);
  CHECK(l3 == 7.0);
  CHECK(r3 == 7.0);
  auto [l4, r4] = c.quadrant_limits(0.0);
  CHECK(l4 == 7.0);
  CHECK(r4 == 7.0);
}

TEST_CASE("canonical form merges equal adjacent values") {
  StepFunction f(Interval(0.0, 1.0), {0.2, 0.5, 0.8}, {1.0, 1.0, 2.0, 2.0});
  StepFunction c = f.canonical();
  CHECK(c.jumps() == std::vector<double>{0.5});
  CHECK(c.values() == std::vector<double>{1.0, 2.0});
  for (double t : {0.0, 0.19, 0.5, 0.77, 1.0}) CHECK(c(t) == f(t));
}

TEST_CASE("sup distance over merged partition") {
  StepFunction f(Interval(0.0, 1.0), 0.0);
  StepFunction g(Interval(0.0, 1.0), {0.5}, {0.0, 1.0});
  CHECK(sup_dist(f, g) == 1.0);
  CHECK(sup_dist(f, f) == 0.0);
  StepFunction a(Interval(0.0, 1.0), 2.0), b(Interval(0.0, 1.0), 3.5);
  CHECK(sup_dist(a, b) == 1.5);
}

TEST_CASE("step argmax endpoints") {
  StepFunction f(Interval(0.0, 1.0), {0.3, 0.7}, {0.0, 1.0, 0.0});
  CHECK(smallest_argmax(f) == 0.3);
  CHECK(largest_argmax(f) == 0.7);
  StepFunction c(Interval(0.0, 1.0), 0.0);
  CHECK(smallest_argmax(c) == 0.0);
  CHECK(largest_argmax(c) == 1.0);
}

TEST_CASE("pure jump function counts one-sided jumps") {
  PureJumpFunction j(Interval(-2.0, 2.0), {-1.5}, {0.7, 1.2});
  CHECK(j(0.0) == 0.0);
  CHECK(j(0.8) == 1.0);
  CHECK(j(1.3) == 2.0);
  CHECK(j(-1.6) == 1.0);
  CHECK(j(-1.5) == 0.0);

  PureJumpFunction empty(Interval(-1.0, 1.0), {}, {});
  CHECK(empty(0.5) == 0.0);
  CHECK(empty(-0.5) == 0.0);

  StepFunction s = j.to_step();
  for (double t : {-2.0, -1.6, -1.5, 0.0, 0.7, 0.8, 1.2, 1.9, 2.0}) CHECK(s(t) == j(t));
}

TEST_CASE("pure jump of a step function uses actual discontinuities") {
  StepFunction f(Interval(-2.0, 2.0), {-1.0, 0.5, 1.0}, {0.0, 0.0, 3.0, 4.0});
  PureJumpFunction j = pure_jump_of(f);
  CHECK(j.jumps_neg().empty());  // the -1 jump has equal values on both sides
  CHECK(j.jumps_pos() == std::vector<double>{0.5, 1.0});

  StepFunction at_zero(Interval(-1.0, 1.0), {0.0}, {0.0, 1.0});
  CHECK_THROWS_AS(pure_jump_of(at_zero), std::invalid_argument);
}
