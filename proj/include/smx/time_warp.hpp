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

#ifndef SMX_TIME_WARP_HPP_
#define SMX_TIME_WARP_HPP_

#include <utility>
#include <vector>

#include "smx/geometry.hpp"
#include "smx/step_function.hpp"

namespace smx {

/// A strictly increasing piecewise-linear bijection of an interval onto
/// itself, stored as interpolation knots (s, lambda(s)) that include both
/// endpoint fixpoints.
class TimeWarp {
 public:
  TimeWarp(Interval domain, std::vector<std::pair<double, double>> knots);

  static TimeWarp identity(Interval domain) {
    return TimeWarp(domain, {{domain.lo, domain.lo}, {domain.hi, domain.hi}});
  }

  const Interval& domain() const { return domain_; }
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

  double operator()(double t) const;
  double inverse(double y) const;
  TimeWarp inverted() const;

  /// sup over chords of |log difference quotient|; for a piecewise-linear
  /// warp this is the max over segment slopes.
  double norm() const;

 private:
  Interval domain_;
  std::vector<std::pair<double, double>> knots_;
};

/// t -> f(lambda(t)): same values, jumps relocated to the preimages of the
/// original jump locations.
StepFunction apply_warp(const StepFunction& f, const TimeWarp& lambda);

}  // namespace smx

#endif  // SMX_TIME_WARP_HPP_
