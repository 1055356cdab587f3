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

#ifndef SMX_LAWS_HPP_
#define SMX_LAWS_HPP_

#include <cmath>
#include <stdexcept>

#include "smx/rng.hpp"
#include "smx/stats.hpp"

namespace smx {

/// Centered error law with finite variance: Normal(0, sigma) or a centered
/// Student-t with nu > 2 scaled by `scale`.
struct ErrorLaw {
  enum class Kind { kNormal, kStudentT };
  Kind kind = Kind::kNormal;
  double sigma = 1.0;  // normal scale, >= 0 (zero means no noise)
  double nu = 3.0;     // student degrees of freedom, > 2
  double scale = 1.0;  // student scale, > 0

  static ErrorLaw normal(double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("ErrorLaw: sigma must be >= 0");
    ErrorLaw law;
    law.kind = Kind::kNormal;
    law.sigma = sigma;
    return law;
  }

  static ErrorLaw student_t(double nu, double scale) {
    if (!(nu > 2.0)) throw std::invalid_argument("ErrorLaw: nu must exceed 2");
    if (!(scale > 0.0)) throw std::invalid_argument("ErrorLaw: scale must be > 0");
    ErrorLaw law;
    law.kind = Kind::kStudentT;
    law.nu = nu;
    law.scale = scale;
    return law;
  }

  double variance() const {
    return kind == Kind::kNormal ? sigma * sigma : scale * scale * nu / (nu - 2.0);
  }

  bool degenerate() const { return kind == Kind::kNormal && sigma == 0.0; }

  double sample(Rng& rng) const {
    if (kind == Kind::kNormal) return sigma * rng.normal();
    double z = rng.normal();
    double chi2 = 2.0 * rng.gamma(0.5 * nu);
    return scale * z / std::sqrt(chi2 / nu);
  }
};

/// Law of the threshold covariate: continuous with a pointwise density.
struct ZLaw {
  enum class Kind { kUniform, kTruncNormal };
  Kind kind = Kind::kUniform;
  double lo = 0.0, hi = 1.0;       // support bounds
  double mu = 0.0, sigma = 1.0;    // truncated-normal parameters

  static ZLaw uniform(double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("ZLaw: requires lo < hi");
    ZLaw law;
    law.kind = Kind::kUniform;
    law.lo = lo;
    law.hi = hi;
    return law;
  }

  static ZLaw truncated_normal(double mu, double sigma, double lo, double hi) {
    if (!(lo < hi) || !(sigma > 0.0))
      throw std::invalid_argument("ZLaw: bad truncated normal parameters");
    ZLaw law;
    law.kind = Kind::kTruncNormal;
    law.mu = mu;
    law.sigma = sigma;
    law.lo = lo;
    law.hi = hi;
    return law;
  }

  double density(double z) const {
    if (z < lo || z > hi) return 0.0;
    if (kind == Kind::kUniform) return 1.0 / (hi - lo);
    double a = (lo - mu) / sigma, b = (hi - mu) / sigma, x = (z - mu) / sigma;
    double mass = normal_cdf(b) - normal_cdf(a);
    return std::exp(-0.5 * x * x) / (std::sqrt(2.0 * M_PI) * sigma * mass);
  }

  double cdf(double z) const {
    if (z <= lo) return 0.0;
    if (z >= hi) return 1.0;
    if (kind == Kind::kUniform) return (z - lo) / (hi - lo);
    double a = (lo - mu) / sigma, b = (hi - mu) / sigma, x = (z - mu) / sigma;
    return (normal_cdf(x) - normal_cdf(a)) / (normal_cdf(b) - normal_cdf(a));
  }

  double sample(Rng& rng) const {
    double u = rng.uniform();
    if (kind == Kind::kUniform) return lo + (hi - lo) * u;
    double a = (lo - mu) / sigma, b = (hi - mu) / sigma;
    double fa = normal_cdf(a), fb = normal_cdf(b);
    return mu + sigma * normal_quantile(fa + u * (fb - fa));
  }
};

}  // namespace smx

#endif  // SMX_LAWS_HPP_
