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

#include "smx/distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace smx {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Max cell cost of the merged partition induced by f's jumps and the
// (already pulled back) positions of g's jumps. Exactly coincident positions
// advance both sides at once.
double cells_sup(const std::vector<double>& fj, const std::vector<double>& gj,
                 const std::vector<std::vector<double>>& cost) {
  double best = cost[0][0];
  std::size_t i = 0, j = 0;
  while (i < fj.size() || j < gj.size()) {
    if (j == gj.size() || (i < fj.size() && fj[i] < gj[j])) {
      ++i;
    } else if (i == fj.size() || gj[j] < fj[i]) {
      ++j;
    } else {
      ++i;
      ++j;
    }
    best = std::max(best, cost[i][j]);
  }
  return best;
}

// Minimum over monotone arrangements of g's jumps against f's partition of
//   (warp-norm minimum subject to the arrangement) + (arrangement cell sup).
//
// An arrangement sends each g jump, in order, to a class: 2i places it
// strictly inside stretch i = (x_{i-1}, x_i), 2i+1 aligns it exactly with
// x_i. The class sequence is nondecreasing and each alignment class is used
// at most once. The sup term depends only on the arrangement. The norm term
// is min over warp values w_i = lambda(x_i) inside the interval constraints
// the arrangement induces, of the max |log slope| of the interpolating warp;
// bisection over the slope band with forward interval propagation solves it.
// Every warp's own arrangement yields a value no larger than its objective,
// and every arrangement value is realized by a warp, so the minimum is the
// exact infimum.
class WarpSearch {
 public:
  WarpSearch(const Interval& dom, std::vector<double> x, std::vector<double> u,
             std::vector<std::vector<double>> cost)
      : dom_(dom), x_(std::move(x)), u_(std::move(u)), cost_(std::move(cost)) {
    m_ = x_.size();
    k_ = u_.size();
  }

  // Returns best objective value; fills classes of the best arrangement.
  double run(std::vector<int>* best_classes) {
    best_ = kInf;
    classes_.assign(k_, 0);
    best_classes_.assign(k_, 0);
    // remaining_[i][j]: smallest achievable maximum over the cells any
    // monotone completion from f-section i / g-section j must still cross.
    remaining_.assign(m_ + 1, std::vector<double>(k_ + 1, 0.0));
    for (std::size_t i = m_ + 1; i-- > 0;) {
      for (std::size_t j = k_ + 1; j-- > 0;) {
        if (i == m_ && j == k_) continue;
        double best = kInf;
        if (i < m_) best = std::min(best, std::max(cost_[i + 1][j], remaining_[i + 1][j]));
        if (j < k_) best = std::min(best, std::max(cost_[i][j + 1], remaining_[i][j + 1]));
        if (i < m_ && j < k_)
          best = std::min(best, std::max(cost_[i + 1][j + 1], remaining_[i + 1][j + 1]));
        remaining_[i][j] = best;
      }
    }
    recurse(0, 0, 0, cost_[0][0], dom_.lo, dom_.lo, 0.0);
    *best_classes = best_classes_;
    return best_;
  }

  // Norm-minimal warp values at the f jumps for a complete arrangement,
  // together with the achieved norm.
  bool solve_norm(const std::vector<int>& classes, double* nu, std::vector<double>* w) const {
    std::vector<double> lb(m_, -kInf), ub(m_, kInf);
    std::vector<bool> pinned(m_, false);
    for (std::size_t j = 0; j < k_; ++j) {
      int c = classes[j];
      if (c % 2 == 1) {
        std::size_t i = static_cast<std::size_t>(c / 2);
        lb[i] = ub[i] = u_[j];
        pinned[i] = true;
      } else {
        std::size_t i = static_cast<std::size_t>(c / 2);  // stretch (x_{i-1}, x_i)
        if (i > 0) ub[i - 1] = std::min(ub[i - 1], u_[j]);
        if (i < m_) lb[i] = std::max(lb[i], u_[j]);
      }
    }
    auto feasible = [&](double nu_try, std::vector<double>* out) {
      double elo = std::exp(-nu_try), ehi = std::exp(nu_try);
      std::vector<double> rlo(m_), rhi(m_);
      double plo = dom_.lo, phi = dom_.lo, px = dom_.lo;
      for (std::size_t i = 0; i < m_; ++i) {
        double dx = x_[i] - px;
        rlo[i] = std::max(plo + elo * dx, lb[i]);
        rhi[i] = std::min(phi + ehi * dx, ub[i]);
        if (rlo[i] > rhi[i]) return false;
        plo = rlo[i];
        phi = rhi[i];
        px = x_[i];
      }
      double dx = dom_.hi - px;
      if (dom_.hi < plo + elo * dx || dom_.hi > phi + ehi * dx) return false;
      if (out) {
        out->assign(m_, 0.0);
        double next = dom_.hi, nx = dom_.hi;
        for (std::size_t i = m_; i-- > 0;) {
          double dxi = nx - x_[i];
          double wlo = std::max(rlo[i], next - ehi * dxi);
          double whi = std::min(rhi[i], next - elo * dxi);
          if (wlo > whi) return false;  // rounding collapse: caller relaxes
          // Prefer the identity value so untouched knots carry slope one.
          (*out)[i] = std::min(std::max(x_[i], wlo), whi);
          next = (*out)[i];
          nx = x_[i];
        }
      }
      return true;
    };
    double lo_nu = 0.0, hi_nu = 1.0;
    if (!feasible(0.0, nullptr)) {
      while (hi_nu < 64.0 && !feasible(hi_nu, nullptr)) hi_nu *= 2.0;
      if (!feasible(hi_nu, nullptr)) return false;
      while (hi_nu - lo_nu > 1e-13) {
        double mid = 0.5 * (lo_nu + hi_nu);
        (feasible(mid, nullptr) ? hi_nu : lo_nu) = mid;
      }
    } else {
      hi_nu = 0.0;
    }
    *nu = hi_nu;
    if (!w) return true;
    // Rebuild the warp values at the smallest slope budget the backward pass
    // accepts; the reported distance re-evaluates this certificate, so the
    // relaxation cannot misstate it.
    bool built = feasible(hi_nu, w);
    for (double relax = 1e-12 * (1.0 + hi_nu); !built; relax *= 8.0) {
      built = feasible(hi_nu + relax, w);
      if (!built && hi_nu + relax > 128.0) return false;
    }
    // Snap near-identity knots exactly onto the diagonal whenever the
    // interval constraints and monotonicity allow; aligned-jump certificates
    // then carry exactly zero norm.
    for (std::size_t i = 0; i < m_; ++i) {
      double cand = x_[i];
      if (std::abs((*w)[i] - cand) > 1e-9 * (1.0 + std::abs(cand))) continue;
      if (cand < lb[i] || cand > ub[i]) continue;
      double prev = i == 0 ? dom_.lo : (*w)[i - 1];
      double next = i + 1 == m_ ? dom_.hi : (*w)[i + 1];
      if (cand > prev && cand < next) (*w)[i] = cand;
    }
    return true;
  }

  const std::vector<double>& f_jumps() const { return x_; }
  const std::vector<double>& g_jumps() const { return u_; }

 private:
  // Advances the f section index from fi to target, accumulating crossed
  // cells against g section j.
  static double cross(const std::vector<std::vector<double>>& cost, std::size_t from,
                      std::size_t to, std::size_t j, double s) {
    for (std::size_t fi = from + 1; fi <= to; ++fi) s = std::max(s, cost[fi][j]);
    return s;
  }

  void recurse(std::size_t j, int frontier, std::size_t fi, double s, double pin_x,
               double pin_w, double norm_lb) {
    if (++nodes_ > kNodeBudget)
      throw std::runtime_error("skorohod distance: arrangement search budget exceeded");
    if (std::max(s, remaining_[fi][j]) + norm_lb >= best_) return;
    if (j == k_) {
      double total = cross(cost_, fi, m_, k_, s);
      if (total + norm_lb >= best_) return;
      double nu;
      if (!solve_norm(classes_, &nu, nullptr)) {
#ifdef SMX_DISTANCE_DEBUG
        std::fprintf(stderr, "infeasible: total=%g classes:", total);
        for (int c : classes_) std::fprintf(stderr, " %d", c);
        std::fprintf(stderr, "\n");
#endif
        return;
      }
      if (nu + total < best_) {
        best_ = nu + total;
        best_classes_ = classes_;
#ifdef SMX_DISTANCE_DEBUG
        std::fprintf(stderr, "best=%.17g nu=%g total=%g classes:", best_, nu, total);
        for (int c : classes_) std::fprintf(stderr, " %d", c);
        std::fprintf(stderr, "\n");
#endif
      }
      return;
    }
    // Candidate classes in proximity order around the natural position; a
    // g jump that coincides with an f jump naturally aligns with it.
    double uj = u_[j];
    auto lower = std::lower_bound(x_.begin(), x_.end(), uj);
    int nat;
    if (lower != x_.end() && *lower == uj)
      nat = 2 * static_cast<int>(lower - x_.begin()) + 1;
    else
      nat = 2 * static_cast<int>(lower - x_.begin());
    std::vector<int> candidates;
    for (int c = frontier; c <= 2 * static_cast<int>(m_); ++c) candidates.push_back(c);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int a, int b) { return std::abs(a - nat) < std::abs(b - nat); });
    for (int c : candidates) {
      std::size_t i = static_cast<std::size_t>(c / 2);
      double s2, lb2 = norm_lb, px2 = pin_x, pw2 = pin_w;
      if (c % 2 == 1) {  // align u_j with x_i
        if (pinnedness_check(c, j)) continue;
        double chord = (uj - pin_w) / (x_[i] - pin_x);
        if (!(chord > 0.0)) continue;
        lb2 = std::max(lb2, std::abs(std::log(chord)));
        s2 = cross(cost_, fi, i, j, s);
        s2 = std::max(s2, cost_[i + 1][j + 1]);
        px2 = x_[i];
        pw2 = uj;
        if (s2 + lb2 >= best_) continue;
        classes_[j] = c;
        recurse(j + 1, c, i + 1, s2, px2, pw2, lb2);
      } else {  // strictly inside stretch i
        // The warp must pass below u_j at x_{i-1} and above it at x_i.
        if (i < m_) {
          double q = (uj - pin_w) / (x_[i] - pin_x);
          if (q > 1.0) lb2 = std::max(lb2, std::log(q));
        }
        if (i > 0 && x_[i - 1] > pin_x) {
          double q = (uj - pin_w) / (x_[i - 1] - pin_x);
          if (q < 1.0) lb2 = std::max(lb2, -std::log(q));
        }
        s2 = cross(cost_, fi, i, j, s);
        s2 = std::max(s2, cost_[i][j + 1]);
        if (s2 + lb2 >= best_) continue;
        classes_[j] = c;
        recurse(j + 1, c, i, s2, px2, pw2, lb2);
      }
    }
  }

  // An alignment class may be used by at most one g jump.
  bool pinnedness_check(int c, std::size_t j) const {
    return j > 0 && classes_[j - 1] == c;
  }

  static constexpr long kNodeBudget = 20'000'000;

  Interval dom_;
  std::vector<double> x_, u_;
  std::vector<std::vector<double>> cost_;
  std::size_t m_ = 0, k_ = 0;
  double best_ = kInf;
  std::vector<int> classes_, best_classes_;
  long nodes_ = 0;
};

TimeWarp warp_from_values(const Interval& dom, const std::vector<double>& x,
                          const std::vector<double>& w) {
  std::vector<std::pair<double, double>> knots;
  knots.emplace_back(dom.lo, dom.lo);
  for (std::size_t i = 0; i < x.size(); ++i) knots.emplace_back(x[i], w[i]);
  knots.emplace_back(dom.hi, dom.hi);
  return TimeWarp(dom, std::move(knots));
}

// Runs the arrangement search and returns the winning warp; callers report
// the re-evaluated objective of this certificate.
TimeWarp run_engine(const Interval& dom, const std::vector<double>& x,
                    const std::vector<double>& u,
                    std::vector<std::vector<double>> cost) {
  WarpSearch search(dom, x, u, std::move(cost));
  std::vector<int> classes;
  search.run(&classes);
  double nu;
  std::vector<double> w;
  if (!search.solve_norm(classes, &nu, &w))
    throw std::logic_error("skorohod distance: winning arrangement infeasible");
  return warp_from_values(dom, x, w);
}

std::vector<double> pullbacks(const std::vector<double>& u, const TimeWarp& warp) {
  std::vector<double> p;
  p.reserve(u.size());
  for (double v : u) p.push_back(warp.inverse(v));
  return p;
}

std::vector<std::vector<double>> step_cost(const StepFunction& f, const StepFunction& g) {
  std::vector<std::vector<double>> c(f.values().size(),
                                     std::vector<double>(g.values().size()));
  for (std::size_t i = 0; i < f.values().size(); ++i)
    for (std::size_t j = 0; j < g.values().size(); ++j)
      c[i][j] = std::abs(f.values()[i] - g.values()[j]);
  return c;
}

std::vector<std::vector<double>> process_cost(const PiecewiseProcess& f,
                                              const PiecewiseProcess& g) {
  std::vector<std::vector<double>> c(f.sections().size(),
                                     std::vector<double>(g.sections().size()));
  for (std::size_t i = 0; i < f.sections().size(); ++i)
    for (std::size_t j = 0; j < g.sections().size(); ++j)
      c[i][j] = section_diff_sup(f.sections()[i], g.sections()[j], f.rect());
  return c;
}

}  // namespace

double sup_dist(const PiecewiseProcess& f, const PiecewiseProcess& g) {
  if (!(f.rect() == g.rect())) throw std::invalid_argument("sup_dist: rectangle mismatch");
  return cells_sup(f.all_jumps(), g.all_jumps(), process_cost(f, g));
}

double warp_objective(const StepFunction& f, const StepFunction& g,
                      const TimeWarp& lambda) {
  if (f.domain().lo != g.domain().lo || f.domain().hi != g.domain().hi ||
      lambda.domain().lo != f.domain().lo || lambda.domain().hi != f.domain().hi)
    throw std::invalid_argument("warp_objective: domain mismatch");
  return lambda.norm() +
         cells_sup(f.jumps(), pullbacks(g.jumps(), lambda), step_cost(f, g));
}

double skorohod_distance(const StepFunction& f, const StepFunction& g) {
  if (f.domain().lo != g.domain().lo || f.domain().hi != g.domain().hi)
    throw std::invalid_argument("skorohod_distance: domain mismatch");
  StepFunction fc = f.canonical(), gc = g.canonical();
  if (fc.identical_to(gc)) return 0.0;
  TimeWarp warp = run_engine(fc.domain(), fc.jumps(), gc.jumps(), step_cost(fc, gc));
#ifdef SMX_DISTANCE_DEBUG
  std::fprintf(stderr, "certificate:");
  for (auto [s, y] : warp.knots()) std::fprintf(stderr, " (%.17g,%.17g)", s, y);
  std::fprintf(stderr, "\nnorm=%.17g objective=%.17g\n", warp.norm(),
               warp_objective(fc, gc, warp));
#endif
  return warp_objective(fc, gc, warp);
}

double tilde_objective(const PiecewiseProcess& f, const PiecewiseProcess& g,
                       const TimeWarp& lambda) {
  if (!(f.rect() == g.rect())) throw std::invalid_argument("tilde_objective: rectangle mismatch");
  if (lambda.domain().lo != f.rect().k1().lo || lambda.domain().hi != f.rect().k1().hi)
    throw std::invalid_argument("tilde_objective: warp domain mismatch");
  return lambda.norm() +
         cells_sup(f.all_jumps(), pullbacks(g.all_jumps(), lambda), process_cost(f, g));
}

TildeDistance tilde_distance(const PiecewiseProcess& f, const PiecewiseProcess& g) {
  if (!(f.rect() == g.rect()))
    throw std::invalid_argument("tilde_distance: rectangle mismatch");
  PiecewiseProcess fc = f.canonical(), gc = g.canonical();
  TimeWarp warp = run_engine(fc.rect().k1(), fc.all_jumps(), gc.all_jumps(),
                             process_cost(fc, gc));
  return {tilde_objective(fc, gc, warp), warp};
}

}  // namespace smx
