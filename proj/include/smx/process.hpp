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

#ifndef SMX_PROCESS_HPP_
#define SMX_PROCESS_HPP_

#include <cstddef>
#include <vector>

#include "smx/geometry.hpp"
#include "smx/sections.hpp"
#include "smx/step_function.hpp"

namespace smx {

/// Unit-jump counting function anchored at zero: jumps_pos counts down-right,
/// jumps_neg counts as t moves left past each location.
///
///   value(t) = #{k : pos[k] <= t} + #{k : neg[k] > t}
///
/// Both jump magnitudes are exactly one and value(0) == 0.
class PureJumpFunction {
 public:
  PureJumpFunction(Interval domain, std::vector<double> jumps_neg,
                   std::vector<double> jumps_pos);

  const Interval& domain() const { return domain_; }
  const std::vector<double>& jumps_neg() const { return jumps_neg_; }  // ascending
  const std::vector<double>& jumps_pos() const { return jumps_pos_; }  // ascending

  double operator()(double t) const;

  /// The same function as an explicit step function (integer values).
  StepFunction to_step() const;

 private:
  Interval domain_;
  std::vector<double> jumps_neg_, jumps_pos_;
};

/// A process on K = K1 x K2 that is a step function of the first coordinate
/// with one continuous K2 section per stretch. Zero is an index anchor
/// strictly inside K1 separating the two one-sided jump sequences; adjacent
/// sections may coincide (the representation is not unique).
class PiecewiseProcess {
 public:
  PiecewiseProcess(Rect rect, std::vector<double> jumps_neg,
                   std::vector<double> jumps_pos, std::vector<Section> sections);

  const Rect& rect() const { return rect_; }
  const std::vector<double>& jumps_neg() const { return jumps_neg_; }  // ascending
  const std::vector<double>& jumps_pos() const { return jumps_pos_; }  // ascending
  /// Sections in stretch order, leftmost first.
  const std::vector<Section>& sections() const { return sections_; }

  /// All jump locations in ascending order.
  std::vector<double> all_jumps() const;

  std::size_t stretch_index(double t) const;
  double operator()(double t, const std::vector<double>& xi) const;

  /// Left end of stretch i (K1.lo for i == 0).
  double stretch_lo(std::size_t i) const;
  /// Right end of stretch i (K1.hi for the last stretch).
  double stretch_hi(std::size_t i) const;

  /// Equivalent representation with identical adjacent sections merged.
  PiecewiseProcess canonical() const;

 private:
  Rect rect_;
  std::vector<double> jumps_neg_, jumps_pos_;
  std::vector<Section> sections_;
};

/// The associated pure jump function: the stored jump lists of the given
/// representation, which is representation-dependent by design.
PureJumpFunction pure_jump_of(const PiecewiseProcess& psi);

/// Pure jump function of a step function built from its actual discontinuity
/// locations (equal adjacent values are not discontinuities). The domain must
/// contain zero in its interior and no discontinuity may sit at zero.
PureJumpFunction pure_jump_of(const StepFunction& f);

/// View of a one-dimensional step function as a (d = 1) piecewise process.
/// Requires zero strictly inside the domain and no jump at zero.
PiecewiseProcess as_process(const StepFunction& f);

}  // namespace smx

#endif  // SMX_PROCESS_HPP_
