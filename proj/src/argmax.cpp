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

#include "smx/argmax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace smx {
namespace {

Point with_t(double t, const std::vector<double>& xi) {
  Point p;
  p.reserve(xi.size() + 1);
  p.push_back(t);
  p.insert(p.end(), xi.begin(), xi.end());
  return p;
}

bool same_xi(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-12) return false;
  return true;
}

}  // namespace

MaximizerReport maximizer_set(const PiecewiseProcess& psi, double tie_tol) {
  if (tie_tol < 0.0) throw std::invalid_argument("maximizer_set: tie_tol must be >= 0");
  const auto& sections = psi.sections();
  std::vector<SectionMax> maxima;
  maxima.reserve(sections.size());
  double global = -std::numeric_limits<double>::infinity();
  for (const Section& s : sections) {
    maxima.push_back(section_max(s, psi.rect()));
    global = std::max(global, maxima.back().sup);
  }
  std::vector<std::size_t> attaining;
  for (std::size_t i = 0; i < maxima.size(); ++i)
    if (maxima[i].sup >= global - tie_tol) attaining.push_back(i);

  MaximizerReport report;
  report.global_sup = global;
  report.unique_flat = attaining.size() == 1;

  const std::int64_t anchor = static_cast<std::int64_t>(psi.jumps_neg().size());
  std::size_t pos = 0;
  while (pos < attaining.size()) {
    std::size_t first = attaining[pos], last = first;
    while (pos + 1 < attaining.size() && attaining[pos + 1] == last + 1 &&
           same_xi(maxima[last].argmax_lexmin, maxima[attaining[pos + 1]].argmax_lexmin)) {
      last = attaining[++pos];
    }
    FlatMax flat;
    flat.stretch_closed = Interval(psi.stretch_lo(first), psi.stretch_hi(last));
    flat.section_index = static_cast<std::int64_t>(first) - anchor;
    flat.sup_value = maxima[first].sup;
    flat.section_argmax = maxima[first].argmax_lexmin;
    report.flats.push_back(std::move(flat));
    ++pos;
  }

  std::size_t first = attaining.front(), last = attaining.back();
  report.sargmax_point = with_t(psi.stretch_lo(first), maxima[first].argmax_lexmin);
  report.largmax_point = with_t(psi.stretch_hi(last), maxima[last].argmax_lexmax);
  return report;
}

Point smallest_argmax(const PiecewiseProcess& psi) {
  return maximizer_set(psi).sargmax_point;
}

Point largest_argmax(const PiecewiseProcess& psi) {
  return maximizer_set(psi).largmax_point;
}

bool has_unique_flat_max(const PiecewiseProcess& psi, double tie_tol) {
  const auto& sections = psi.sections();
  double global = -std::numeric_limits<double>::infinity();
  std::vector<SectionMax> maxima;
  maxima.reserve(sections.size());
  for (const Section& s : sections) {
    maxima.push_back(section_max(s, psi.rect()));
    global = std::max(global, maxima.back().sup);
  }
  std::size_t count = 0, winner = 0;
  for (std::size_t i = 0; i < maxima.size(); ++i) {
    if (maxima[i].sup >= global - tie_tol) {
      ++count;
      winner = i;
    }
  }
  return count == 1 && maxima[winner].unique;
}

}  // namespace smx
