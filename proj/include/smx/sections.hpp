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

#ifndef SMX_SECTIONS_HPP_
#define SMX_SECTIONS_HPP_

#include <variant>
#include <vector>

#include "smx/geometry.hpp"

namespace smx {

// K2 slices of a piecewise process. Three concrete families: constants,
// concave quadratics and grid-sampled multilinear interpolants. They are the
// only section shapes the samplers and estimators emit, and they keep sups,
// argmaxes and pairwise sup-distances computable in closed form.

struct ConstSection {
  double c = 0.0;
};

/// xi -> c + w.xi - xi'M xi / 2 with M symmetric positive semidefinite.
struct QuadraticSection {
  double c = 0.0;
  std::vector<double> w;               // length = K2 dim
  std::vector<std::vector<double>> m;  // symmetric PSD, same dim
};

/// Multilinear interpolation of values sampled on a per-axis grid spanning
/// K2. `values` is row-major over the grid axes.
struct GridSection {
  std::vector<std::vector<double>> grids;
  std::vector<double> values;
};

using Section = std::variant<ConstSection, QuadraticSection, GridSection>;

/// Validates shape/PSD/grid-span invariants; throws std::invalid_argument.
void validate_section(const Section& s, const Rect& rect);

double eval_section(const Section& s, const std::vector<double>& xi);

bool sections_identical(const Section& a, const Section& b);

/// Supremum of a section over K2 with both lexicographic extremes of the
/// maximizer set.
struct SectionMax {
  double sup = 0.0;
  std::vector<double> argmax_lexmin;
  std::vector<double> argmax_lexmax;
  bool unique = true;  // lexmin == lexmax within tolerance
};

SectionMax section_max(const Section& s, const Rect& rect);

/// Exact sup over K2 of |a - b|. Const/quadratic pairs (and grid pairs up to
/// two K2 dimensions, where the cell-wise difference is still a quadratic)
/// use interior critical points plus recursive face enumeration. Grid pairs
/// are evaluated on the merged grid. Mixed grid/quadratic cases beyond two
/// dimensions fall back to a sampled sup on a fixed mesh (64 points per axis
/// per cell), which is the documented approximation.
double section_diff_sup(const Section& a, const Section& b, const Rect& rect);

}  // namespace smx

#endif  // SMX_SECTIONS_HPP_
