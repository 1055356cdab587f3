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

#include "smx/processes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace smx {
namespace {

// One side of a two-sided event stream. Extension continues the same draw
// sequence, so a path restricted to a smaller horizon never changes when the
// horizon grows.
struct EventStream {
  Rng rng;
  double rate;
  const JumpLaw* law;
  std::vector<double> times;  // cumulative, ascending, positive
  std::vector<double> sizes;

  EventStream(std::uint64_t seed, double rate_, const JumpLaw* law_)
      : rng(seed), rate(rate_), law(law_) {}

  void extend(double horizon) {
    double t = times.empty() ? 0.0 : times.back();
    while (t < horizon) {
      t += rng.exponential(rate);
      times.push_back(t);
      sizes.push_back(law->sample(rng));
    }
  }

  // Events strictly inside (0, horizon).
  std::size_t count_inside(double horizon) const {
    return static_cast<std::size_t>(
        std::lower_bound(times.begin(), times.end(), horizon) - times.begin());
  }
};

StepFunction assemble_path(const EventStream& left, const EventStream& right,
                           double lo, double hi) {
  std::size_t nl = 0;
  while (nl < left.times.size() && left.times[nl] < -lo) ++nl;
  std::size_t nr = 0;
  while (nr < right.times.size() && right.times[nr] < hi) ++nr;

  std::vector<double> jumps, values;
  jumps.reserve(nl + nr);
  values.reserve(nl + nr + 1);
  for (std::size_t k = nl; k-- > 0;) jumps.push_back(-left.times[k]);
  for (std::size_t k = 0; k < nr; ++k) jumps.push_back(right.times[k]);
  // Left stretch values accumulate moving away from the central zero flat:
  // the stretch left of the k-th left event carries the first k jump sizes.
  std::vector<double> lsum(nl + 1, 0.0);
  for (std::size_t k = 0; k < nl; ++k) lsum[k + 1] = lsum[k] + left.sizes[k];
  for (std::size_t k = nl + 1; k-- > 1;) values.push_back(lsum[k]);
  values.push_back(0.0);
  double acc = 0.0;
  for (std::size_t k = 0; k < nr; ++k) {
    acc += right.sizes[k];
    values.push_back(acc);
  }
  return StepFunction(Interval(lo, hi), std::move(jumps), std::move(values));
}

}  // namespace

JumpLaw JumpLaw::normal(double mu, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("JumpLaw: sigma must be > 0");
  JumpLaw law;
  law.kind = Kind::kNormal;
  law.mu = mu;
  law.sigma = sigma;
  return law;
}

JumpLaw JumpLaw::point_mass(double value) {
  JumpLaw law;
  law.kind = Kind::kPointMass;
  law.value = value;
  return law;
}

JumpLaw JumpLaw::shifted(double c, double s, ErrorLaw eps) {
  JumpLaw law;
  law.kind = Kind::kShifted;
  law.c = c;
  law.s = s;
  law.eps = eps;
  return law;
}

double JumpLaw::mean() const {
  switch (kind) {
    case Kind::kNormal:
      return mu;
    case Kind::kPointMass:
      return value;
    case Kind::kShifted:
      return -c;
  }
  return 0.0;
}

double JumpLaw::sample(Rng& rng) const {
  switch (kind) {
    case Kind::kNormal:
      return mu + sigma * rng.normal();
    case Kind::kPointMass:
      return value;
    case Kind::kShifted:
      return -(c + s * eps.sample(rng));
  }
  return 0.0;
}

CompoundPoissonSpec::CompoundPoissonSpec(double rate_pos_, double rate_neg_,
                                         JumpLaw law_pos_, JumpLaw law_neg_)
    : rate_pos(rate_pos_),
      rate_neg(rate_neg_),
      law_pos(std::move(law_pos_)),
      law_neg(std::move(law_neg_)) {
  if (!(rate_pos > 0.0 && rate_neg > 0.0))
    throw std::invalid_argument("CompoundPoissonSpec: rates must be > 0");
  if (!(law_pos.mean() < 0.0 && law_neg.mean() < 0.0))
    throw std::invalid_argument(
        "CompoundPoissonSpec: jump means must be negative for a finite argmax");
}

LimitProcessSpec::LimitProcessSpec(CompoundPoissonSpec q_, Mat gauss_cov_, Mat info_)
    : q(std::move(q_)), gauss_cov(std::move(gauss_cov_)), info(std::move(info_)) {
  if (gauss_cov.size() != info.size())
    throw std::invalid_argument("LimitProcessSpec: dimension mismatch");
  double scale = 1.0;
  for (const auto& row : gauss_cov)
    for (double v : row) scale = std::max(scale, std::abs(v));
  if (!is_symmetric(gauss_cov, 1e-12 * scale) || !is_symmetric(info, 1e-12 * scale))
    throw std::invalid_argument("LimitProcessSpec: matrices must be symmetric");
  if (!is_positive_definite(gauss_cov) || !is_positive_definite(info))
    throw std::invalid_argument("LimitProcessSpec: matrices must be positive definite");
}

StepFunction sample_compound_poisson(const CompoundPoissonSpec& spec, double horizon,
                                     Rng& rng) {
  if (!(horizon > 0.0))
    throw std::invalid_argument("sample_compound_poisson: horizon must be > 0");
  EventStream right(rng.next_u64(), spec.rate_pos, &spec.law_pos);
  EventStream left(rng.next_u64(), spec.rate_neg, &spec.law_neg);
  right.extend(horizon);
  left.extend(horizon);
  return assemble_path(left, right, -horizon, horizon);
}

AdaptiveArgmax argmax_of_compound_poisson(const CompoundPoissonSpec& spec, Rng& rng,
                                          double initial_horizon, double buffer_frac) {
  if (!(initial_horizon > 0.0))
    throw std::invalid_argument("argmax_of_compound_poisson: bad initial horizon");
  if (!(buffer_frac > 0.0 && buffer_frac < 0.5))
    throw std::invalid_argument("argmax_of_compound_poisson: buffer_frac in (0, 0.5)");
  EventStream right(rng.next_u64(), spec.rate_pos, &spec.law_pos);
  EventStream left(rng.next_u64(), spec.rate_neg, &spec.law_neg);

  double horizon = initial_horizon;
  for (int round = 0; round <= 10; ++round, horizon *= 2.0) {
    right.extend(horizon);
    left.extend(horizon);
    StepFunction path = assemble_path(left, right, -horizon, horizon);
    const double inner = (1.0 - buffer_frac) * horizon;
    double max_inner = -std::numeric_limits<double>::infinity();
    double max_buffer = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < path.values().size(); ++i) {
      double a = i == 0 ? -horizon : path.jumps()[i - 1];
      double b = i == path.jumps().size() ? horizon : path.jumps()[i];
      if (a <= inner && b > -inner) max_inner = std::max(max_inner, path.values()[i]);
      if (a < -inner || b > inner) max_buffer = std::max(max_buffer, path.values()[i]);
    }
    if (max_inner > max_buffer) {
      AdaptiveArgmax out;
      out.sargmax_t = smallest_argmax(path);
      out.largmax_t = largest_argmax(path);
      out.horizon = horizon;
      return out;
    }
  }
  throw std::runtime_error(
      "argmax_of_compound_poisson: horizon cap exceeded without containment");
}

PiecewiseProcess sample_limit_process(const LimitProcessSpec& spec, const Rect& rect,
                                      Rng& rng) {
  if (rect.k2_dim() != spec.info.size())
    throw std::invalid_argument("sample_limit_process: rectangle dimension mismatch");
  if (!rect.k1().contains_interior(0.0))
    throw std::invalid_argument("sample_limit_process: K1 must contain 0");
  double horizon = std::max(-rect.k1().lo, rect.k1().hi);
  StepFunction q = sample_compound_poisson(spec.q, horizon, rng);

  const std::size_t d = spec.info.size();
  Vec w(d, 0.0);
  auto chol = cholesky(spec.gauss_cov);
  Vec z(d);
  for (std::size_t i = 0; i < d; ++i) z[i] = rng.normal();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= i; ++j) w[i] += (*chol)[i][j] * z[j];

  std::vector<double> jumps_neg, jumps_pos;
  std::vector<Section> sections;
  std::vector<double> consts;
  consts.push_back(q.values()[0]);
  for (std::size_t i = 0; i < q.jumps().size(); ++i) {
    double t = q.jumps()[i];
    if (t <= rect.k1().lo || t >= rect.k1().hi) {
      if (t <= rect.k1().lo) consts[0] = q.values()[i + 1];
      continue;
    }
    (t < 0.0 ? jumps_neg : jumps_pos).push_back(t);
    consts.push_back(q.values()[i + 1]);
  }
  sections.reserve(consts.size());
  for (double c : consts) {
    QuadraticSection s;
    s.c = c;
    s.w = w;
    s.m = spec.info;
    sections.push_back(std::move(s));
  }
  return PiecewiseProcess(rect, std::move(jumps_neg), std::move(jumps_pos),
                          std::move(sections));
}

CompoundPoissonSpec derive_changepoint_limit(const ChangePointModel& model) {
  model.validate();
  double gap = model.beta0 - model.alpha0;
  double rate = model.z_law.density(model.zeta0);
  if (model.eps_law.degenerate()) {
    JumpLaw pm = JumpLaw::point_mass(-gap * gap);
    return CompoundPoissonSpec(rate, rate, pm, pm);
  }
  JumpLaw pos = JumpLaw::shifted(gap * gap, 2.0 * gap, model.eps_law);
  JumpLaw neg = JumpLaw::shifted(gap * gap, -2.0 * gap, model.eps_law);
  return CompoundPoissonSpec(rate, rate, pos, neg);
}

}  // namespace smx
