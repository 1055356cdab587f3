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

#ifndef SMX_COX_HPP_
#define SMX_COX_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "smx/geometry.hpp"
#include "smx/laws.hpp"
#include "smx/numerics.hpp"
#include "smx/rng.hpp"
#include "smx/stats.hpp"

namespace smx {

struct CensorLaw {
  enum class Kind { kExponential, kUniform };
  Kind kind = Kind::kExponential;
  double rate = 0.25;  // exponential
  double hi = 10.0;    // uniform on (0, hi)

  static CensorLaw exponential(double rate);
  static CensorLaw uniform(double hi);
  double sample(Rng& rng) const;
};

/// Proportional hazards with a change point at a threshold in the scalar
/// covariate z3 (time-fixed covariates, exponential baseline):
///   hazard(t | z) = baseline_rate * exp(alpha.z1 + beta.z2 1{z3<=zeta0}
///                                      + gamma.z2 1{z3>zeta0}).
/// z1 and z2 coordinates are i.i.d. standard normal; z3 follows z_law.
struct CoxThresholdModel {
  Interval threshold_interval{0.25, 0.75};  // I
  double zeta0 = 0.5;
  Vec alpha0{0.5};
  Vec beta0{1.0};
  Vec gamma0{-1.0};
  double baseline_rate = 1.0;
  CensorLaw censor_law = CensorLaw::exponential(0.25);
  ZLaw z3_law = ZLaw::uniform(0.0, 1.0);

  void validate() const;
  std::size_t p() const { return alpha0.size(); }
  std::size_t q() const { return beta0.size(); }
};

/// Right-censored survival rows with distinct observed times.
class SurvivalDataset {
 public:
  SurvivalDataset(std::vector<double> time, std::vector<int> status,
                  std::vector<Vec> z1, std::vector<Vec> z2, std::vector<double> z3);

  std::size_t size() const { return time_.size(); }
  std::size_t p() const { return z1_.empty() ? 0 : z1_[0].size(); }
  std::size_t q() const { return z2_.empty() ? 0 : z2_[0].size(); }
  const std::vector<double>& time() const { return time_; }
  const std::vector<int>& status() const { return status_; }
  const std::vector<Vec>& z1() const { return z1_; }
  const std::vector<Vec>& z2() const { return z2_; }
  const std::vector<double>& z3() const { return z3_; }
  /// Row indices by descending time (risk sets grow along this order).
  const std::vector<std::size_t>& by_time_desc() const { return by_time_desc_; }

 private:
  std::vector<double> time_;
  std::vector<int> status_;
  std::vector<Vec> z1_, z2_;
  std::vector<double> z3_;
  std::vector<std::size_t> by_time_desc_;
};

SurvivalDataset simulate_cox(const CoxThresholdModel& model, std::size_t n, Rng& rng);

/// Cox partial log-likelihood at threshold zeta and coefficients
/// (alpha, beta, gamma); piecewise constant in zeta between z3 order
/// statistics.
double partial_loglik(const SurvivalDataset& data, double zeta, const Vec& alpha,
                      const Vec& beta, const Vec& gamma);

struct CoxFit {
  double zeta_hat = 0.0;
  Vec alpha_hat, beta_hat, gamma_hat;
  double loglik = 0.0;
  bool separation_flag = false;  // coefficient norm ran away during profiling
};

/// Profile partial likelihood over candidate thresholds {I.lo} plus observed
/// z3 inside I; the inner concave maximization runs damped Newton (gradient
/// norm < 1e-8, at most 100 iterations, warm-started along the profile).
/// The smallest candidate attaining the maximum wins.
CoxFit fit_cox_threshold(const SurvivalDataset& data, const Interval& interval);

struct RateStudyRow {
  std::size_t n = 0;
  std::vector<double> errors;  // zeta_hat - zeta0 per successful replication
  std::size_t failures = 0;
};

struct RateStudy {
  std::vector<RateStudyRow> rows;
};

/// Quantiles (5, 25, 50, 75, 95 percent) of n^exponent * (zeta_hat - zeta0).
std::vector<double> scaled_quantiles(const RateStudyRow& row, double exponent);

/// R replications of simulate + fit per sample size. Replication r of sample
/// size index k uses seed mix_seed(mix_seed(master_seed, k), r); failures are
/// recorded, not fatal.
RateStudy rate_study(const CoxThresholdModel& model, const std::vector<std::size_t>& ns,
                     std::size_t replications, std::uint64_t master_seed,
                     int threads = 1);

}  // namespace smx

#endif  // SMX_COX_HPP_
