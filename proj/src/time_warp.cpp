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

#include "smx/time_warp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smx {

TimeWarp::TimeWarp(Interval domain, std::vector<std::pair<double, double>> knots)
    : domain_(domain), knots_(std::move(knots)) {
  if (knots_.size() < 2) throw std::invalid_argument("TimeWarp: needs >= 2 knots");
  if (knots_.front() != std::pair<double, double>(domain_.lo, domain_.lo) ||
      knots_.back() != std::pair<double, double>(domain_.hi, domain_.hi))
    throw std::invalid_argument("TimeWarp: endpoints must be fixed points");
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i].first > knots_[i - 1].first) ||
        !(knots_[i].second > knots_[i - 1].second))
      throw std::invalid_argument("TimeWarp: knots must be strictly increasing");
  }
}

double TimeWarp::operator()(double t) const {
  if (!domain_.contains(t)) throw std::domain_error("TimeWarp: t outside domain");
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                             [](double v, const auto& k) { return v < k.first; });
  if (it == knots_.begin()) return knots_.front().second;
  if (it == knots_.end()) return knots_.back().second;
  const auto& [s1, y1] = *it;
  const auto& [s0, y0] = *(it - 1);
  if (t == s0) return y0;
  return y0 + (y1 - y0) * (t - s0) / (s1 - s0);
}

double TimeWarp::inverse(double y) const {
  if (!domain_.contains(y)) throw std::domain_error("TimeWarp: y outside range");
  auto it = std::upper_bound(knots_.begin(), knots_.end(), y,
                             [](double v, const auto& k) { return v < k.second; });
  if (it == knots_.begin()) return knots_.front().first;
  if (it == knots_.end()) return knots_.back().first;
  const auto& [s1, y1] = *it;
  const auto& [s0, y0] = *(it - 1);
  if (y == y0) return s0;
  return s0 + (s1 - s0) * (y - y0) / (y1 - y0);
}

TimeWarp TimeWarp::inverted() const {
  std::vector<std::pair<double, double>> inv;
  inv.reserve(knots_.size());
  for (const auto& [s, y] : knots_) inv.emplace_back(y, s);
  return TimeWarp(domain_, std::move(inv));
}

double TimeWarp::norm() const {
  double best = 0.0;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    double slope = (knots_[i].second - knots_[i - 1].second) /
                   (knots_[i].first - knots_[i - 1].first);
    if (!(slope > 0.0)) throw std::invalid_argument("TimeWarp: non-increasing segment");
    best = std::max(best, std::abs(std::log(slope)));
  }
  return best;
}

StepFunction apply_warp(const StepFunction& f, const TimeWarp& lambda) {
  if (f.domain().lo != lambda.domain().lo || f.domain().hi != lambda.domain().hi)
    throw std::invalid_argument("apply_warp: domain mismatch");
  std::vector<double> jumps;
  jumps.reserve(f.jumps().size());
  for (double x : f.jumps()) jumps.push_back(lambda.inverse(x));
  return StepFunction(f.domain(), std::move(jumps), f.values());
}

}  // namespace smx
