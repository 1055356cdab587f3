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

#ifndef SMX_STATS_HPP_
#define SMX_STATS_HPP_

#include <vector>

namespace smx {

double normal_cdf(double x);
/// Inverse standard normal CDF (Acklam's rational approximation plus one
/// Halley refinement; full double accuracy away from the extreme tails).
double normal_quantile(double p);

/// Regularized incomplete gamma P(a, x) and Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// Upper tail probability of a chi-square with `df` degrees of freedom.
double chi_square_upper_tail(double df, double x);

/// Right-continuous empirical distribution of a sample.
class Ecdf {
 public:
  explicit Ecdf(std::vector<double> samples);

  const std::vector<double>& sorted_samples() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

  /// F(x) = (#samples <= x) / N.
  double operator()(double x) const;

 private:
  std::vector<double> sorted_;
};

/// Exact sup-norm distance between two ECDFs, evaluated over the merged
/// sample points (both one-sided limits are covered since both functions are
/// constant between merged points).
double ks_distance(const Ecdf& a, const Ecdf& b);

/// Linear-interpolation sample quantile of a sorted vector (h = (n-1)q).
double quantile(const std::vector<double>& sorted, double q);

}  // namespace smx

#endif  // SMX_STATS_HPP_
