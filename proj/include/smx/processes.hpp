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

#ifndef SMX_PROCESSES_HPP_
#define SMX_PROCESSES_HPP_

#include <utility>
#include <vector>

#include "smx/changepoint.hpp"
#include "smx/laws.hpp"
#include "smx/numerics.hpp"
#include "smx/process.hpp"
#include "smx/rng.hpp"
#include "smx/step_function.hpp"

namespace smx {

/// Jump-size law of a compound Poisson process.
struct JumpLaw {
  enum class Kind { kNormal, kPointMass, kShifted };
  Kind kind = Kind::kPointMass;
  double mu = 0.0, sigma = 1.0;  // normal
  double value = -1.0;           // point mass
  double c = 1.0, s = 1.0;       // shifted: -(c + s * eps)
  ErrorLaw eps = ErrorLaw::normal(1.0);

  static JumpLaw normal(double mu, double sigma);
  static JumpLaw point_mass(double value);
  /// Law of -(c + s * eps) with eps drawn from `eps`; mean is -c.
  static JumpLaw shifted(double c, double s, ErrorLaw eps);

  double mean() const;
  double sample(Rng& rng) const;
};

/// Two-sided compound Poisson process: event rate and jump law per side.
/// Both laws must have strictly negative mean so that the path drifts down
/// in both directions and its argmax over the line is finite.
struct CompoundPoissonSpec {
  double rate_pos = 1.0;
  double rate_neg = 1.0;
  JumpLaw law_pos;
  JumpLaw law_neg;

  CompoundPoissonSpec(double rate_pos_, double rate_neg_, JumpLaw law_pos_,
                      JumpLaw law_neg_);
};

/// Parameters of the limit form Q(u1) + v.W - v'I v / 2.
struct LimitProcessSpec {
  CompoundPoissonSpec q;
  Mat gauss_cov;  // covariance of W, positive definite
  Mat info;       // I, positive definite

  LimitProcessSpec(CompoundPoissonSpec q_, Mat gauss_cov_, Mat info_);
};

/// Draws the path on [-horizon, horizon]: Q(0) = 0, cumulative jump sums to
/// the right of the first positive event, mirrored accumulation moving left,
/// flat zero stretch between the innermost events. Right side is drawn first
/// (alternating gap and jump size), then the left side.
StepFunction sample_compound_poisson(const CompoundPoissonSpec& spec, double horizon,
                                     Rng& rng);

/// Draws Q on rect.K1 and one Gaussian vector W ~ N(0, gauss_cov), then
/// emits the process whose stretch-k section is the shared quadratic
/// v -> Q_k + v.W - v'I v / 2 (w and m are shared bitwise across stretches).
PiecewiseProcess sample_limit_process(const LimitProcessSpec& spec, const Rect& rect,
                                      Rng& rng);

struct AdaptiveArgmax {
  double sargmax_t = 0.0;
  double largmax_t = 0.0;
  double horizon = 0.0;  // accepted horizon
};

/// Smallest/largest argmax of the two-sided path over the whole line,
/// computed on a doubling horizon. A horizon is accepted once the maximum
/// over the inner (1 - buffer_frac) window strictly exceeds every path value
/// in the outer buffers; horizon extension reuses the same per-side event
/// streams so the result is a measurable function of the stream state.
/// Throws std::runtime_error past 2^10 times the initial horizon.
AdaptiveArgmax argmax_of_compound_poisson(const CompoundPoissonSpec& spec, Rng& rng,
                                          double initial_horizon = 8.0,
                                          double buffer_frac = 0.1);

/// The compound Poisson limit of the rescaled change-point objective in its
/// threshold coordinate: both rates equal the Z density at the change point;
/// a crossing from the right contributes -(beta0-alpha0)^2 - 2(beta0-alpha0)eps
/// and from the left the sign-flipped coefficient. A noiseless model gives
/// point masses.
CompoundPoissonSpec derive_changepoint_limit(const ChangePointModel& model);

}  // namespace smx

#endif  // SMX_PROCESSES_HPP_
