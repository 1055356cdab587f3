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

#include "smx/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace smx {

StepFunction::StepFunction(Interval domain, std::vector<double> jumps,
                           std::vector<double> values)
    : domain_(domain), jumps_(std::move(jumps)), values_(std::move(values)) {
  if (values_.size() != jumps_.size() + 1)
    throw std::invalid_argument("StepFunction: values must have jumps+1 entries");
  double prev = domain_.lo;
  for (double j : jumps_) {
    if (!(j > prev))
      throw std::invalid_argument("StepFunction: jumps must be strictly increasing");
    prev = j;
  }
  if (!jumps_.empty() &&
      (!(jumps_.front() > domain_.lo) || !(jumps_.back() < domain_.hi)))
    throw std::invalid_argument("StepFunction: jumps must be strictly inside the domain");
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("StepFunction: non-finite value");
}

std::size_t StepFunction::stretch_index(double t) const {
  if (!domain_.contains(t)) throw std::domain_error("StepFunction: t outside domain");
  // First jump > t; f is constant on [jumps[i-1], jumps[i]).
  return static_cast<std::size_t>(
      std::upper_bound(jumps_.begin(), jumps_.end(), t) - jumps_.begin());
}

double StepFunction::operator()(double t) const { return values_[stretch_index(t)]; }

std::pair<double, double> StepFunction::quadrant_limits(double t) const {
  std::size_t idx = stretch_index(t);
  double right = values_[idx];
  double left = right;
  if (t == domain_.lo) {
    left = values_.front();
  } else if (idx > 0 && jumps_[idx - 1] == t) {
    left = values_[idx - 1];
  }
  return {left, right};
}

StepFunction StepFunction::canonical() const {
  std::vector<double> js, vs;
  vs.push_back(values_[0]);
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (values_[i + 1] != vs.back()) {
      js.push_back(jumps_[i]);
      vs.push_back(values_[i + 1]);
    }
  }
  return StepFunction(domain_, std::move(js), std::move(vs));
}

double sup_dist(const StepFunction& f, const StepFunction& g) {
  if (f.domain().lo != g.domain().lo || f.domain().hi != g.domain().hi)
    throw std::invalid_argument("sup_dist: domain mismatch");
  double best = std::abs(f.values()[0] - g.values()[0]);
  std::size_t i = 0, j = 0;
  const auto& fj = f.jumps();
  const auto& gj = g.jumps();
  while (i < fj.size() || j < gj.size()) {
    if (j == gj.size() || (i < fj.size() && fj[i] < gj[j])) {
      ++i;
    } else if (i == fj.size() || gj[j] < fj[i]) {
      ++j;
    } else {
      ++i;
      ++j;
    }
    best = std::max(best, std::abs(f.values()[i] - g.values()[j]));
  }
  return best;
}

double smallest_argmax(const StepFunction& f) {
  double sup = *std::max_element(f.values().begin(), f.values().end());
  for (std::size_t i = 0; i < f.values().size(); ++i)
    if (f.values()[i] == sup) return i == 0 ? f.domain().lo : f.jumps()[i - 1];
  return f.domain().lo;  // unreachable
}

double largest_argmax(const StepFunction& f) {
  double sup = *std::max_element(f.values().begin(), f.values().end());
  for (std::size_t i = f.values().size(); i-- > 0;)
    if (f.values()[i] == sup)
      return i == f.jumps().size() ? f.domain().hi : f.jumps()[i];
  return f.domain().hi;  // unreachable
}

}  // namespace smx
