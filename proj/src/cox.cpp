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

#include "smx/cox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "smx/parallel.hpp"

namespace smx {
namespace {

// Covariate row under a threshold: x = (z1, z2 1{z3<=zeta}, z2 1{z3>zeta}).
void fill_design_row(const SurvivalDataset& data, std::size_t i, double zeta, Vec* x) {
  const std::size_t p = data.p(), q = data.q();
  x->assign(p + 2 * q, 0.0);
  for (std::size_t a = 0; a < p; ++a) (*x)[a] = data.z1()[i][a];
  const bool low = data.z3()[i] <= zeta;
  for (std::size_t b = 0; b < q; ++b) (*x)[p + (low ? b : q + b)] = data.z2()[i][b];
}

struct LoglikDerivatives {
  double value = 0.0;
  Vec gradient;
  Mat hessian;
};

// One descending-time sweep accumulating S0, S1, S2 of the risk set with a
// running rescale by the largest linear predictor seen so far.
LoglikDerivatives loglik_with_derivatives(const SurvivalDataset& data, double zeta,
                                          const Vec& xi, bool want_derivs) {
  const std::size_t dim = xi.size();
  LoglikDerivatives out;
  out.gradient.assign(want_derivs ? dim : 0, 0.0);
  out.hessian.assign(want_derivs ? dim : 0, Vec(dim, 0.0));

  double m = -std::numeric_limits<double>::infinity();
  double s0 = 0.0;
  Vec s1(dim, 0.0);
  Mat s2(want_derivs ? dim : 0, Vec(dim, 0.0));
  Vec x(dim);
  bool any_event = false;

  for (std::size_t idx : data.by_time_desc()) {
    fill_design_row(data, idx, zeta, &x);
    double eta = dot(x, xi);
    if (eta > m) {
      double r = std::isfinite(m) ? std::exp(m - eta) : 0.0;
      s0 *= r;
      for (std::size_t a = 0; a < dim; ++a) s1[a] *= r;
      if (want_derivs)
        for (std::size_t a = 0; a < dim; ++a)
          for (std::size_t b = 0; b < dim; ++b) s2[a][b] *= r;
      m = eta;
    }
    double e = std::exp(eta - m);
    s0 += e;
    for (std::size_t a = 0; a < dim; ++a) s1[a] += e * x[a];
    if (want_derivs)
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) s2[a][b] += e * x[a] * x[b];
    if (data.status()[idx] == 1) {
      any_event = true;
      out.value += eta - (m + std::log(s0));
      if (want_derivs) {
        for (std::size_t a = 0; a < dim; ++a) out.gradient[a] += x[a] - s1[a] / s0;
        for (std::size_t a = 0; a < dim; ++a)
          for (std::size_t b = 0; b < dim; ++b)
            out.hessian[a][b] -= s2[a][b] / s0 - (s1[a] / s0) * (s1[b] / s0);
      }
    }
  }
  if (!any_event) throw std::invalid_argument("partial_loglik: dataset has no events");
  return out;
}

struct NewtonResult {
  Vec xi;
  double loglik = 0.0;
  bool converged = false;
  bool separation = false;
};

// Damped Newton on the concave partial log-likelihood at fixed zeta.
// Coordinates with no informative rows (an empty threshold side) are pinned
// at zero and solved out of the system.
NewtonResult maximize_at(const SurvivalDataset& data, double zeta, const Vec& start) {
  const std::size_t p = data.p(), q = data.q();
  const std::size_t dim = p + 2 * q;
  bool any_low = false, any_high = false;
  for (double z : data.z3()) (z <= zeta ? any_low : any_high) = true;
  std::vector<std::size_t> alive;
  for (std::size_t a = 0; a < p; ++a) alive.push_back(a);
  if (any_low)
    for (std::size_t b = 0; b < q; ++b) alive.push_back(p + b);
  if (any_high)
    for (std::size_t b = 0; b < q; ++b) alive.push_back(p + q + b);

  NewtonResult res;
  res.xi = start;
  for (std::size_t a = 0; a < dim; ++a) {
    bool keep = std::find(alive.begin(), alive.end(), a) != alive.end();
    if (!keep) res.xi[a] = 0.0;
  }
  LoglikDerivatives d = loglik_with_derivatives(data, zeta, res.xi, true);
  for (int iter = 0; iter < 100; ++iter) {
    double gnorm = 0.0;
    for (std::size_t a : alive) gnorm += d.gradient[a] * d.gradient[a];
    gnorm = std::sqrt(gnorm);
    if (gnorm < 1e-8) {
      res.converged = true;
      break;
    }
    const std::size_t na = alive.size();
    Mat neg_h(na, Vec(na));
    Vec g(na);
    for (std::size_t r = 0; r < na; ++r) {
      g[r] = d.gradient[alive[r]];
      for (std::size_t c = 0; c < na; ++c) neg_h[r][c] = -d.hessian[alive[r]][alive[c]];
    }
    auto step = cholesky_solve(neg_h, g, 1e-10);
    if (!step) break;
    double scale = 1.0;
    bool improved = false;
    for (int half = 0; half < 40; ++half, scale *= 0.5) {
      Vec trial = res.xi;
      for (std::size_t r = 0; r < na; ++r) trial[alive[r]] += scale * (*step)[r];
      LoglikDerivatives dt = loglik_with_derivatives(data, zeta, trial, true);
      if (dt.value >= d.value - 1e-14) {
        res.xi = std::move(trial);
        d = std::move(dt);
        improved = true;
        break;
      }
    }
    if (!improved) break;
    double norm = 0.0;
    for (double v : res.xi) norm += v * v;
    if (std::sqrt(norm) > 1e3) {
      res.separation = true;
      break;
    }
  }
  res.loglik = d.value;
  return res;
}

}  // namespace

CensorLaw CensorLaw::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("CensorLaw: rate must be > 0");
  CensorLaw law;
  law.kind = Kind::kExponential;
  law.rate = rate;
  return law;
}

CensorLaw CensorLaw::uniform(double hi) {
  if (!(hi > 0.0)) throw std::invalid_argument("CensorLaw: hi must be > 0");
  CensorLaw law;
  law.kind = Kind::kUniform;
  law.hi = hi;
  return law;
}

double CensorLaw::sample(Rng& rng) const {
  return kind == Kind::kExponential ? rng.exponential(rate) : rng.uniform(0.0, hi);
}

void CoxThresholdModel::validate() const {
  if (!(threshold_interval.contains_interior(zeta0)))
    throw std::invalid_argument("CoxThresholdModel: zeta0 must be inside I");
  if (!(baseline_rate > 0.0))
    throw std::invalid_argument("CoxThresholdModel: baseline_rate must be > 0");
  if (beta0.size() != gamma0.size())
    throw std::invalid_argument("CoxThresholdModel: beta0/gamma0 size mismatch");
  if (beta0 == gamma0)
    throw std::invalid_argument("CoxThresholdModel: beta0 == gamma0 has no change point");
  // I must sit strictly inside the support of z3.
  if (!(z3_law.cdf(threshold_interval.lo) > 0.0 &&
        z3_law.cdf(threshold_interval.hi) < 1.0))
    throw std::invalid_argument("CoxThresholdModel: I must be interior to the z3 support");
}

SurvivalDataset::SurvivalDataset(std::vector<double> time, std::vector<int> status,
                                 std::vector<Vec> z1, std::vector<Vec> z2,
                                 std::vector<double> z3)
    : time_(std::move(time)),
      status_(std::move(status)),
      z1_(std::move(z1)),
      z2_(std::move(z2)),
      z3_(std::move(z3)) {
  const std::size_t n = time_.size();
  if (status_.size() != n || z1_.size() != n || z2_.size() != n || z3_.size() != n)
    throw std::invalid_argument("SurvivalDataset: column sizes differ");
  if (n == 0) throw std::invalid_argument("SurvivalDataset: empty");
  by_time_desc_.resize(n);
  for (std::size_t i = 0; i < n; ++i) by_time_desc_[i] = i;
  std::sort(by_time_desc_.begin(), by_time_desc_.end(),
            [&](std::size_t a, std::size_t b) { return time_[a] > time_[b]; });
  for (std::size_t i = 1; i < n; ++i)
    if (time_[by_time_desc_[i]] == time_[by_time_desc_[i - 1]])
      throw std::invalid_argument("SurvivalDataset: tied event times are rejected");
}

SurvivalDataset simulate_cox(const CoxThresholdModel& model, std::size_t n, Rng& rng) {
  model.validate();
  if (n < 2) throw std::invalid_argument("simulate_cox: n must be >= 2");
  const std::size_t p = model.p(), q = model.q();
  std::vector<double> time(n), z3(n);
  std::vector<int> status(n);
  std::vector<Vec> z1(n, Vec(p)), z2(n, Vec(q));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < p; ++a) z1[i][a] = rng.normal();
    for (std::size_t b = 0; b < q; ++b) z2[i][b] = rng.normal();
    z3[i] = model.z3_law.sample(rng);
    const Vec& side = z3[i] <= model.zeta0 ? model.beta0 : model.gamma0;
    double eta = dot(model.alpha0, z1[i]) + dot(side, z2[i]);
    double t0 = rng.exponential(model.baseline_rate * std::exp(eta));
    double cens = model.censor_law.sample(rng);
    time[i] = std::min(t0, cens);
    status[i] = t0 <= cens ? 1 : 0;
  }
  return SurvivalDataset(std::move(time), std::move(status), std::move(z1),
                         std::move(z2), std::move(z3));
}

double partial_loglik(const SurvivalDataset& data, double zeta, const Vec& alpha,
                      const Vec& beta, const Vec& gamma) {
  if (alpha.size() != data.p() || beta.size() != data.q() || gamma.size() != data.q())
    throw std::invalid_argument("partial_loglik: coefficient dimension mismatch");
  Vec xi;
  xi.reserve(alpha.size() + beta.size() + gamma.size());
  xi.insert(xi.end(), alpha.begin(), alpha.end());
  xi.insert(xi.end(), beta.begin(), beta.end());
  xi.insert(xi.end(), gamma.begin(), gamma.end());
  return loglik_with_derivatives(data, zeta, xi, false).value;
}

CoxFit fit_cox_threshold(const SurvivalDataset& data, const Interval& interval) {
  const std::size_t p = data.p(), q = data.q();
  std::vector<double> candidates{interval.lo};
  {
    std::vector<double> inside;
    for (double z : data.z3())
      if (z > interval.lo && z <= interval.hi) inside.push_back(z);
    std::sort(inside.begin(), inside.end());
    candidates.insert(candidates.end(), inside.begin(), inside.end());
  }

  CoxFit best;
  bool have = false;
  bool any_separation = false;
  Vec warm(p + 2 * q, 0.0);
  for (double zeta : candidates) {
    NewtonResult r = maximize_at(data, zeta, warm);
    any_separation = any_separation || r.separation;
    if (!r.converged) continue;
    warm = r.xi;
    if (!have || r.loglik > best.loglik) {
      have = true;
      best.zeta_hat = zeta;
      best.loglik = r.loglik;
      best.alpha_hat.assign(r.xi.begin(), r.xi.begin() + p);
      best.beta_hat.assign(r.xi.begin() + p, r.xi.begin() + p + q);
      best.gamma_hat.assign(r.xi.begin() + p + q, r.xi.end());
    }
  }
  if (!have)
    throw std::runtime_error("fit_cox_threshold: no candidate threshold converged");
  best.separation_flag = any_separation;
  return best;
}

std::vector<double> scaled_quantiles(const RateStudyRow& row, double exponent) {
  std::vector<double> scaled;
  scaled.reserve(row.errors.size());
  double factor = std::pow(static_cast<double>(row.n), exponent);
  for (double e : row.errors) scaled.push_back(factor * e);
  std::sort(scaled.begin(), scaled.end());
  std::vector<double> out;
  for (double qq : {0.05, 0.25, 0.5, 0.75, 0.95}) out.push_back(quantile(scaled, qq));
  return out;
}

RateStudy rate_study(const CoxThresholdModel& model, const std::vector<std::size_t>& ns,
                     std::size_t replications, std::uint64_t master_seed, int threads) {
  model.validate();
  if (replications < 1) throw std::invalid_argument("rate_study: replications >= 1");
  RateStudy study;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    RateStudyRow row;
    row.n = ns[k];
    std::vector<double> errors(replications,
                               std::numeric_limits<double>::quiet_NaN());
    std::uint64_t level_seed = mix_seed(master_seed, k);
    parallel_for(replications, threads, [&](std::size_t r) {
      Rng rng(mix_seed(level_seed, r));
      try {
        SurvivalDataset data = simulate_cox(model, row.n, rng);
        CoxFit fit = fit_cox_threshold(data, model.threshold_interval);
        errors[r] = fit.zeta_hat - model.zeta0;
      } catch (const std::exception&) {
        // counted below
      }
    });
    for (double e : errors) {
      if (std::isnan(e))
        ++row.failures;
      else
        row.errors.push_back(e);
    }
    study.rows.push_back(std::move(row));
  }
  return study;
}

}  // namespace smx
