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

#ifndef SMX_GEOMETRY_HPP_
#define SMX_GEOMETRY_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace smx {

/// A nondegenerate compact interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  Interval() = default;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
  }

  double length() const { return hi - lo; }
  bool contains(double t) const { return lo <= t && t <= hi; }
  bool contains_interior(double t) const { return lo < t && t < hi; }
};

/// A compact axis-aligned rectangle, split as K1 = axes[0] (the cadlag
/// coordinate) and K2 = axes[1..] (the continuous coordinates).
struct Rect {
  std::vector<Interval> axes;

  Rect() = default;
  explicit Rect(std::vector<Interval> axes_) : axes(std::move(axes_)) {
    if (axes.empty()) throw std::invalid_argument("Rect: needs at least one axis");
  }

  std::size_t dim() const { return axes.size(); }
  const Interval& k1() const { return axes[0]; }
  // Number of K2 coordinates (zero in the one-dimensional case).
  std::size_t k2_dim() const { return axes.size() - 1; }
  const Interval& k2_axis(std::size_t i) const { return axes[i + 1]; }

  bool contains(double t, const std::vector<double>& xi) const {
    if (xi.size() != k2_dim()) return false;
    if (!axes[0].contains(t)) return false;
    for (std::size_t i = 0; i < xi.size(); ++i)
      if (!axes[i + 1].contains(xi[i])) return false;
    return true;
  }

  bool operator==(const Rect& o) const {
    if (axes.size() != o.axes.size()) return false;
    for (std::size_t i = 0; i < axes.size(); ++i)
      if (axes[i].lo != o.axes[i].lo || axes[i].hi != o.axes[i].hi) return false;
    return true;
  }
};

}  // namespace smx

#endif  // SMX_GEOMETRY_HPP_
