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

#ifndef SMX_ARGMAX_HPP_
#define SMX_ARGMAX_HPP_

#include <cstdint>
#include <vector>

#include "smx/geometry.hpp"
#include "smx/process.hpp"

namespace smx {

/// A point of K written (t, xi...); coordinate 0 is the cadlag coordinate.
using Point = std::vector<double>;

/// A maximal stretch of the process on which the supremum is attained.
/// `stretch_closed` is the closure of the attaining interval: its right end
/// belongs to the maximizer set through the left quadrant limit.
struct FlatMax {
  Interval stretch_closed;
  std::int64_t section_index = 0;  // 0 anchors the stretch containing zero
  double sup_value = 0.0;
  Point section_argmax;  // smallest-lexicographic maximizer of the section
};

struct MaximizerReport {
  double global_sup = 0.0;
  std::vector<FlatMax> flats;  // attaining stretches, adjacent equals merged
  Point sargmax_point;
  Point largmax_point;
  /// True when exactly one section attains the global sup within the tie
  /// tolerance (before merging).
  bool unique_flat = false;
};

/// Per-section suprema, attaining flats and both extreme maximizers.
/// Adjacent attaining stretches merge into one flat when their section
/// argmaxes agree; `unique_flat` still counts sections before merging.
MaximizerReport maximizer_set(const PiecewiseProcess& psi, double tie_tol = 0.0);

/// The maximizer with the smallest t, then lexicographically smallest
/// remaining coordinates.
Point smallest_argmax(const PiecewiseProcess& psi);

/// The maximizer with the largest t (right end of the last attaining
/// stretch), then lexicographically largest remaining coordinates.
Point largest_argmax(const PiecewiseProcess& psi);

/// True when exactly one section attains the global sup within tie_tol and
/// that section has a unique maximizer over K2.
bool has_unique_flat_max(const PiecewiseProcess& psi, double tie_tol = 0.0);

}  // namespace smx

#endif  // SMX_ARGMAX_HPP_
