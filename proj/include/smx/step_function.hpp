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

#ifndef SMX_STEP_FUNCTION_HPP_
#define SMX_STEP_FUNCTION_HPP_

#include <utility>
#include <vector>

#include "smx/geometry.hpp"

namespace smx {

/// A cadlag step function with finitely many jumps on a compact interval.
///
/// f(t) = values[j] on [jumps[j-1], jumps[j]) with the convention
/// jumps[-1] = domain.lo and jumps[n] = domain.hi, and f(hi) = values.back().
/// Jumps are strictly increasing and strictly inside the domain; no jump may
/// sit at an endpoint.
class StepFunction {
 public:
  StepFunction(Interval domain, std::vector<double> jumps,
               std::vector<double> values);

  /// Constant function on `domain`.
  StepFunction(Interval domain, double value)
      : StepFunction(domain, {}, std::vector<double>{value}) {}

  const Interval& domain() const { return domain_; }
  const std::vector<double>& jumps() const { return jumps_; }
  const std::vector<double>& values() const { return values_; }

  /// Value at t (cadlag convention). Throws std::domain_error outside.
  double operator()(double t) const;

  /// Index of the stretch containing t: f(t) == values()[stretch_index(t)].
  std::size_t stretch_index(double t) const;

  /// (left limit, right limit) at t. At domain.lo the left limit is f(lo),
  /// at domain.hi the right limit is f(hi).
  std::pair<double, double> quadrant_limits(double t) const;

  /// Equivalent representation with equal adjacent values merged.
  StepFunction canonical() const;

  bool identical_to(const StepFunction& o) const {
    return domain_.lo == o.domain_.lo && domain_.hi == o.domain_.hi &&
           jumps_ == o.jumps_ && values_ == o.values_;
  }

 private:
  Interval domain_;
  std::vector<double> jumps_;
  std::vector<double> values_;
};

/// Exact sup-norm distance between two step functions on the same domain.
double sup_dist(const StepFunction& f, const StepFunction& g);

/// Smallest maximizer: t-coordinate of the left end of the first stretch
/// attaining the supremum.
double smallest_argmax(const StepFunction& f);

/// Largest maximizer: right end of the last attaining stretch (the sup is
/// attained there through the left limit).
double largest_argmax(const StepFunction& f);

}  // namespace smx

#endif  // SMX_STEP_FUNCTION_HPP_
