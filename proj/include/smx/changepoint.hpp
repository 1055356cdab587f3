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

#ifndef SMX_CHANGEPOINT_HPP_
#define SMX_CHANGEPOINT_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "smx/geometry.hpp"
#include "smx/laws.hpp"
#include "smx/process.hpp"
#include "smx/rng.hpp"

namespace smx {

/// Two-level regression with a threshold in the covariate:
/// Y = alpha0 1{Z <= zeta0} + beta0 1{Z > zeta0} + eps.
struct ChangePointModel {
  double zeta0 = 0.5;
  double alpha0 = 0.0;
  double beta0 = 1.0;
  double c1 = 0.1, c2 = 0.9;  // threshold search interval
  ZLaw z_law = ZLaw::uniform(0.0, 1.0);
  ErrorLaw eps_law = ErrorLaw::normal(0.5);

  void validate() const;
};

/// Observations (y, z) with pairwise-distinct z (continuous covariate).
class Dataset {
 public:
  Dataset(std::vector<double> y, std::vector<double> z);

  std::size_t size() const { return y_.size(); }
  const std::vector<double>& y() const { return y_; }
  const std::vector<double>& z() const { return z_; }
  /// Row indices ordered by ascending z.
  const std::vector<std::size_t>& order() const { return order_; }

 private:
  std::vector<double> y_, z_;
  std::vector<std::size_t> order_;
};

struct CpEstimate {
  double zeta_hat = 0.0;
  double alpha_hat = 0.0;
  double beta_hat = 0.0;
  double objective_value = 0.0;
};

Dataset simulate_changepoint(const ChangePointModel& model, std::size_t n, Rng& rng);

/// -(1/n) sum (y_i - alpha 1{z_i<=zeta} - beta 1{z_i>zeta})^2, accumulated in
/// row order. Constant in zeta between consecutive z order statistics.
double least_squares_objective(const Dataset& data, double zeta, double alpha,
                               double beta);

/// (mean y on {z <= zeta}, mean y on {z > zeta}); an empty side takes the
/// overall mean.
std::pair<double, double> side_means(const Dataset& data, double zeta);

/// Profile least squares over candidate thresholds {c1} plus the observed z
/// in [c1, c2]; the smallest candidate attaining the maximum wins and the
/// side means are re-fit there.
CpEstimate fit_changepoint(const Dataset& data, double c1, double c2);

struct Theta0 {
  double zeta0 = 0.0;
  double alpha0 = 0.0;
  double beta0 = 0.0;
};

/// The rescaled objective around theta0 over the window H:
///   h -> sum_i [ m_(theta0 + (h1/n, h2/rn, h3/rn)) - m_theta0 ](x_i),
/// rn = sqrt(n). Jumps in h1 sit exactly at n(z_i - zeta0); the (h2, h3)
/// sections are exact concave quadratics. Also returns the pure jump record
/// of the crossing locations.
std::pair<PiecewiseProcess, PureJumpFunction> localized_process(
    const Dataset& data, const Theta0& theta0, const Rect& window, double c1,
    double c2);

}  // namespace smx

#endif  // SMX_CHANGEPOINT_HPP_
