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

#include "smx/changepoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace smx {

void ChangePointModel::validate() const {
  if (!(c1 < zeta0 && zeta0 < c2))
    throw std::invalid_argument("ChangePointModel: needs c1 < zeta0 < c2");
  if (alpha0 == beta0)
    throw std::invalid_argument("ChangePointModel: alpha0 == beta0 has no change point");
  if (!(z_law.cdf(c1) > 0.0 && z_law.cdf(c2) < 1.0))
    throw std::invalid_argument("ChangePointModel: Z must put mass outside [c1, c2]");
  const double eta = 1e-3 * (c2 - c1);
  if (!(z_law.density(zeta0) > 0.0 && z_law.density(zeta0 - eta) > 0.0 &&
        z_law.density(zeta0 + eta) > 0.0))
    throw std::invalid_argument("ChangePointModel: Z density must be positive near zeta0");
}

Dataset::Dataset(std::vector<double> y, std::vector<double> z)
    : y_(std::move(y)), z_(std::move(z)) {
  if (y_.size() != z_.size()) throw std::invalid_argument("Dataset: size mismatch");
  if (y_.empty()) throw std::invalid_argument("Dataset: empty");
  order_.resize(z_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
  std::sort(order_.begin(), order_.end(),
            [&](std::size_t a, std::size_t b) { return z_[a] < z_[b]; });
  for (std::size_t i = 1; i < order_.size(); ++i)
    if (z_[order_[i]] == z_[order_[i - 1]])
      throw std::invalid_argument("Dataset: tied z values are rejected");
}

Dataset simulate_changepoint(const ChangePointModel& model, std::size_t n, Rng& rng) {
  model.validate();
  if (n < 2) throw std::invalid_argument("simulate_changepoint: n must be >= 2");
  std::vector<double> y(n), z(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = model.z_law.sample(rng);
    double eps = model.eps_law.sample(rng);
    y[i] = (z[i] <= model.zeta0 ? model.alpha0 : model.beta0) + eps;
  }
  return Dataset(std::move(y), std::move(z));
}

double least_squares_objective(const Dataset& data, double zeta, double alpha,
                               double beta) {
  double acc = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    double r = data.y()[i] - (data.z()[i] <= zeta ? alpha : beta);
    acc += r * r;
  }
  return -acc / static_cast<double>(data.size());
}

std::pair<double, double> side_means(const Dataset& data, double zeta) {
  double sl = 0.0, sr = 0.0;
  std::size_t nl = 0, nr = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data.z()[i] <= zeta) {
      sl += data.y()[i];
      ++nl;
    } else {
      sr += data.y()[i];
      ++nr;
    }
  }
  double overall = (sl + sr) / static_cast<double>(data.size());
  double ml = nl > 0 ? sl / static_cast<double>(nl) : overall;
  double mr = nr > 0 ? sr / static_cast<double>(nr) : overall;
  return {ml, mr};
}

CpEstimate fit_changepoint(const Dataset& data, double c1, double c2) {
  if (!(c1 < c2)) throw std::invalid_argument("fit_changepoint: needs c1 < c2");
  const std::size_t n = data.size();

  std::vector<double> candidates{c1};
  for (std::size_t k = 0; k < n; ++k) {
    double zv = data.z()[data.order()[k]];
    if (zv >= c1 && zv <= c2 && zv != c1) candidates.push_back(zv);
  }
  std::sort(candidates.begin(), candidates.end());

  // Screening sweep with prefix sums in z order; exact profile values are
  // recomputed below through the same accumulation the objective uses, so a
  // brute-force candidate scan reproduces the estimator bit for bit.
  std::vector<double> psum(n + 1, 0.0), psq(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double yv = data.y()[data.order()[k]];
    psum[k + 1] = psum[k] + yv;
    psq[k + 1] = psq[k] + yv * yv;
  }
  auto left_count = [&](double zeta) {
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (data.z()[data.order()[mid]] <= zeta)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  };
  double sweep_best = -std::numeric_limits<double>::infinity();
  std::vector<double> sweep(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    std::size_t nl = left_count(candidates[c]);
    std::size_t nr = n - nl;
    double overall = psum[n] / static_cast<double>(n);
    double ml = nl > 0 ? psum[nl] / static_cast<double>(nl) : overall;
    double mr = nr > 0 ? (psum[n] - psum[nl]) / static_cast<double>(nr) : overall;
    double ss = (psq[nl] - 2.0 * ml * psum[nl] + static_cast<double>(nl) * ml * ml) +
                (psq[n] - psq[nl] - 2.0 * mr * (psum[n] - psum[nl]) +
                 static_cast<double>(nr) * mr * mr);
    sweep[c] = -ss / static_cast<double>(n);
    sweep_best = std::max(sweep_best, sweep[c]);
  }
  const double band = 1e-8 * (1.0 + std::abs(sweep_best));

  CpEstimate est;
  bool have = false;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (sweep[c] < sweep_best - band) continue;
    auto [ml, mr] = side_means(data, candidates[c]);
    double value = least_squares_objective(data, candidates[c], ml, mr);
    if (!have || value > est.objective_value) {
      have = true;
      est.zeta_hat = candidates[c];
      est.alpha_hat = ml;
      est.beta_hat = mr;
      est.objective_value = value;
    }
  }
  return est;
}

std::pair<PiecewiseProcess, PureJumpFunction> localized_process(
    const Dataset& data, const Theta0& theta0, const Rect& window, double c1,
    double c2) {
  const std::size_t n = data.size();
  const double rn = std::sqrt(static_cast<double>(n));
  const Interval& h1win = window.k1();
  if (window.k2_dim() != 2)
    throw std::invalid_argument("localized_process: window must cover (h1, h2, h3)");
  if (!h1win.contains_interior(0.0))
    throw std::invalid_argument("localized_process: h1 window must contain 0");
  double zlo = theta0.zeta0 + h1win.lo / static_cast<double>(n);
  double zhi = theta0.zeta0 + h1win.hi / static_cast<double>(n);
  if (zlo < c1 || zhi > c2)
    throw std::invalid_argument("localized_process: window leaves the parameter set");

  // Classification at the left edge of the window, then one flip per crossing.
  std::vector<std::size_t> crossing;  // row ids, ascending z
  double base_w1 = 0.0, base_w2 = 0.0, base_c = 0.0;
  std::size_t base_nl = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = data.order()[k];
    double z = data.z()[i], y = data.y()[i];
    double fit0 = z <= theta0.zeta0 ? theta0.alpha0 : theta0.beta0;
    if (z <= zlo) {
      ++base_nl;
      base_w1 += y - theta0.alpha0;
      base_c += (y - fit0) * (y - fit0) - (y - theta0.alpha0) * (y - theta0.alpha0);
    } else {
      base_w2 += y - theta0.beta0;
      base_c += (y - fit0) * (y - fit0) - (y - theta0.beta0) * (y - theta0.beta0);
      if (z <= zhi) crossing.push_back(i);
    }
  }

  std::vector<double> jumps_neg, jumps_pos;
  std::vector<Section> sections;
  auto push_section = [&](std::size_t nl, double w1, double w2, double c) {
    QuadraticSection q;
    q.c = c;
    q.w = {2.0 * w1 / rn, 2.0 * w2 / rn};
    double nn = static_cast<double>(n);
    q.m = {{2.0 * static_cast<double>(nl) / nn, 0.0},
           {0.0, 2.0 * static_cast<double>(n - nl) / nn}};
    sections.push_back(std::move(q));
  };

  std::size_t nl = base_nl;
  double w1 = base_w1, w2 = base_w2, c = base_c;
  push_section(nl, w1, w2, c);
  for (std::size_t i : crossing) {
    double z = data.z()[i], y = data.y()[i];
    double h1 = static_cast<double>(n) * (z - theta0.zeta0);
    if (h1 == 0.0)
      throw std::invalid_argument("localized_process: observation exactly at zeta0");
    if (!(h1 > h1win.lo && h1 < h1win.hi))
      continue;  // boundary collision in floating point; measure zero
    (h1 < 0.0 ? jumps_neg : jumps_pos).push_back(h1);
    ++nl;
    w1 += y - theta0.alpha0;
    w2 -= y - theta0.beta0;
    c += (y - theta0.beta0) * (y - theta0.beta0) -
         (y - theta0.alpha0) * (y - theta0.alpha0);
    push_section(nl, w1, w2, c);
  }

  PiecewiseProcess process(window, jumps_neg, jumps_pos, std::move(sections));
  PureJumpFunction jumps(h1win, std::move(jumps_neg), std::move(jumps_pos));
  return {std::move(process), std::move(jumps)};
}

}  // namespace smx
