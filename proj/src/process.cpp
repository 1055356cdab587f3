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

#include "smx/process.hpp"

#include <algorithm>
#include <stdexcept>

namespace smx {

PureJumpFunction::PureJumpFunction(Interval domain, std::vector<double> jumps_neg,
                                   std::vector<double> jumps_pos)
    : domain_(domain), jumps_neg_(std::move(jumps_neg)), jumps_pos_(std::move(jumps_pos)) {
  if (!domain_.contains_interior(0.0))
    throw std::invalid_argument("PureJumpFunction: domain must contain 0 in its interior");
  for (std::size_t i = 0; i < jumps_neg_.size(); ++i) {
    if (!(jumps_neg_[i] < 0.0) || !(jumps_neg_[i] > domain_.lo))
      throw std::invalid_argument("PureJumpFunction: negative jumps must lie in (lo, 0)");
    if (i > 0 && !(jumps_neg_[i] > jumps_neg_[i - 1]))
      throw std::invalid_argument("PureJumpFunction: jumps must be strictly increasing");
  }
  for (std::size_t i = 0; i < jumps_pos_.size(); ++i) {
    if (!(jumps_pos_[i] > 0.0) || !(jumps_pos_[i] < domain_.hi))
      throw std::invalid_argument("PureJumpFunction: positive jumps must lie in (0, hi)");
    if (i > 0 && !(jumps_pos_[i] > jumps_pos_[i - 1]))
      throw std::invalid_argument("PureJumpFunction: jumps must be strictly increasing");
  }
}

double PureJumpFunction::operator()(double t) const {
  if (!domain_.contains(t)) throw std::domain_error("PureJumpFunction: t outside domain");
  auto pos = std::upper_bound(jumps_pos_.begin(), jumps_pos_.end(), t) - jumps_pos_.begin();
  auto neg = jumps_neg_.end() - std::upper_bound(jumps_neg_.begin(), jumps_neg_.end(), t);
  return static_cast<double>(pos + neg);
}

StepFunction PureJumpFunction::to_step() const {
  std::vector<double> jumps = jumps_neg_;
  jumps.insert(jumps.end(), jumps_pos_.begin(), jumps_pos_.end());
  std::vector<double> values;
  values.reserve(jumps.size() + 1);
  values.push_back((*this)(domain_.lo));
  for (double j : jumps) values.push_back((*this)(j));
  return StepFunction(domain_, std::move(jumps), std::move(values));
}

PiecewiseProcess::PiecewiseProcess(Rect rect, std::vector<double> jumps_neg,
                                   std::vector<double> jumps_pos,
                                   std::vector<Section> sections)
    : rect_(std::move(rect)),
      jumps_neg_(std::move(jumps_neg)),
      jumps_pos_(std::move(jumps_pos)),
      sections_(std::move(sections)) {
  const Interval& k1 = rect_.k1();
  if (!k1.contains_interior(0.0))
    throw std::invalid_argument("PiecewiseProcess: 0 must lie strictly inside K1");
  for (std::size_t i = 0; i < jumps_neg_.size(); ++i) {
    if (!(jumps_neg_[i] < 0.0) || !(jumps_neg_[i] > k1.lo))
      throw std::invalid_argument("PiecewiseProcess: negative jumps must lie in (lo, 0)");
    if (i > 0 && !(jumps_neg_[i] > jumps_neg_[i - 1]))
      throw std::invalid_argument("PiecewiseProcess: jumps must be strictly increasing");
  }
  for (std::size_t i = 0; i < jumps_pos_.size(); ++i) {
    if (!(jumps_pos_[i] > 0.0) || !(jumps_pos_[i] < k1.hi))
      throw std::invalid_argument("PiecewiseProcess: positive jumps must lie in (0, hi)");
    if (i > 0 && !(jumps_pos_[i] > jumps_pos_[i - 1]))
      throw std::invalid_argument("PiecewiseProcess: jumps must be strictly increasing");
  }
  if (sections_.size() != jumps_neg_.size() + jumps_pos_.size() + 1)
    throw std::invalid_argument("PiecewiseProcess: need one section per stretch");
  for (const Section& s : sections_) validate_section(s, rect_);
}

std::vector<double> PiecewiseProcess::all_jumps() const {
  std::vector<double> jumps = jumps_neg_;
  jumps.insert(jumps.end(), jumps_pos_.begin(), jumps_pos_.end());
  return jumps;
}

std::size_t PiecewiseProcess::stretch_index(double t) const {
  if (!rect_.k1().contains(t)) throw std::domain_error("PiecewiseProcess: t outside K1");
  auto in_neg =
      std::upper_bound(jumps_neg_.begin(), jumps_neg_.end(), t) - jumps_neg_.begin();
  if (static_cast<std::size_t>(in_neg) < jumps_neg_.size())
    return static_cast<std::size_t>(in_neg);
  auto in_pos =
      std::upper_bound(jumps_pos_.begin(), jumps_pos_.end(), t) - jumps_pos_.begin();
  return jumps_neg_.size() + static_cast<std::size_t>(in_pos);
}

double PiecewiseProcess::operator()(double t, const std::vector<double>& xi) const {
  if (!rect_.contains(t, xi))
    throw std::domain_error("PiecewiseProcess: point outside the rectangle");
  return eval_section(sections_[stretch_index(t)], xi);
}

double PiecewiseProcess::stretch_lo(std::size_t i) const {
  if (i == 0) return rect_.k1().lo;
  std::size_t nn = jumps_neg_.size();
  return i <= nn ? jumps_neg_[i - 1] : jumps_pos_[i - nn - 1];
}

double PiecewiseProcess::stretch_hi(std::size_t i) const {
  std::size_t nn = jumps_neg_.size();
  if (i < nn) return jumps_neg_[i];
  std::size_t p = i - nn;
  return p < jumps_pos_.size() ? jumps_pos_[p] : rect_.k1().hi;
}

PiecewiseProcess PiecewiseProcess::canonical() const {
  std::vector<double> neg, pos;
  std::vector<Section> secs;
  secs.push_back(sections_[0]);
  std::vector<double> jumps = all_jumps();
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (sections_identical(secs.back(), sections_[i + 1])) continue;
    (jumps[i] < 0.0 ? neg : pos).push_back(jumps[i]);
    secs.push_back(sections_[i + 1]);
  }
  return PiecewiseProcess(rect_, std::move(neg), std::move(pos), std::move(secs));
}

PureJumpFunction pure_jump_of(const PiecewiseProcess& psi) {
  return PureJumpFunction(psi.rect().k1(), psi.jumps_neg(), psi.jumps_pos());
}

PureJumpFunction pure_jump_of(const StepFunction& f) {
  StepFunction c = f.canonical();
  std::vector<double> neg, pos;
  for (double j : c.jumps()) {
    if (j == 0.0)
      throw std::invalid_argument("pure_jump_of: discontinuity at 0 is not representable");
    (j < 0.0 ? neg : pos).push_back(j);
  }
  return PureJumpFunction(c.domain(), std::move(neg), std::move(pos));
}

PiecewiseProcess as_process(const StepFunction& f) {
  std::vector<double> neg, pos;
  std::vector<Section> secs;
  secs.push_back(ConstSection{f.values()[0]});
  for (std::size_t i = 0; i < f.jumps().size(); ++i) {
    double j = f.jumps()[i];
    if (j == 0.0) throw std::invalid_argument("as_process: jump at 0 is not representable");
    (j < 0.0 ? neg : pos).push_back(j);
    secs.push_back(ConstSection{f.values()[i + 1]});
  }
  return PiecewiseProcess(Rect({f.domain()}), std::move(neg), std::move(pos),
                          std::move(secs));
}

}  // namespace smx
