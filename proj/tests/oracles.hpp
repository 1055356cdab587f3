// Test-only oracles, independent of the library's minimization paths.

#ifndef SMX_TESTS_ORACLES_HPP_
#define SMX_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "smx/rng.hpp"
#include "smx/step_function.hpp"

namespace smx_test {

// A piecewise-linear warp as raw interior knots (s, y), endpoints implicit.
struct RawWarp {
  std::vector<std::pair<double, double>> knots;
};

// Direct objective evaluation: max |log segment slope| plus the exact sup of
// |f - g(lambda(.))| over the merged jump partition.
inline double raw_objective(const smx::StepFunction& f, const smx::StepFunction& g,
                            const RawWarp& w) {
  const double lo = f.domain().lo, hi = f.domain().hi;
  std::vector<std::pair<double, double>> knots;
  knots.emplace_back(lo, lo);
  knots.insert(knots.end(), w.knots.begin(), w.knots.end());
  knots.emplace_back(hi, hi);
  double norm = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    double ds = knots[i].first - knots[i - 1].first;
    double dy = knots[i].second - knots[i - 1].second;
    if (!(ds > 0.0) || !(dy > 0.0)) return 1e100;
    norm = std::max(norm, std::abs(std::log(dy / ds)));
  }
  // Pull g's jumps back through the warp.
  std::vector<double> pulled;
  for (double u : g.jumps()) {
    std::size_t seg = 1;
    while (seg + 1 < knots.size() && knots[seg].second < u) ++seg;
    const auto& [s0, y0] = knots[seg - 1];
    const auto& [s1, y1] = knots[seg];
    pulled.push_back(u == y0 ? s0 : s0 + (s1 - s0) * (u - y0) / (y1 - y0));
  }
  double sup = std::abs(f.values()[0] - g.values()[0]);
  std::size_t i = 0, j = 0;
  while (i < f.jumps().size() || j < pulled.size()) {
    if (j == pulled.size() ||
        (i < f.jumps().size() && f.jumps()[i] < pulled[j])) {
      ++i;
    } else if (i == f.jumps().size() || pulled[j] < f.jumps()[i]) {
      ++j;
    } else {
      ++i;
      ++j;
    }
    sup = std::max(sup, std::abs(f.values()[i] - g.values()[j]));
  }
  return norm + sup;
}

// Brute-force minimum over piecewise-linear warps with up to three interior
// knots drawn from a mesh (jump coordinates of both functions plus a uniform
// grid), refined by compass search on the best candidates.
inline double oracle_skorohod_distance(const smx::StepFunction& f,
                                       const smx::StepFunction& g) {
  const double lo = f.domain().lo, hi = f.domain().hi;
  std::vector<double> mesh;
  for (int k = 1; k < 10; ++k) mesh.push_back(lo + (hi - lo) * k / 10.0);
  for (double x : f.jumps()) mesh.push_back(x);
  for (double u : g.jumps()) mesh.push_back(u);
  std::sort(mesh.begin(), mesh.end());
  mesh.erase(std::unique(mesh.begin(), mesh.end()), mesh.end());

  double best = raw_objective(f, g, RawWarp{});
  std::vector<RawWarp> top{RawWarp{}};
  auto consider = [&](const RawWarp& w) {
    double v = raw_objective(f, g, w);
    if (v < best) {
      best = v;
      top.insert(top.begin(), w);
      if (top.size() > 12) top.pop_back();
    }
  };
  const std::size_t n = mesh.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t va = 0; va < n; ++va)
      consider(RawWarp{{{mesh[a], mesh[va]}}});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t va = 0; va < n; ++va)
        for (std::size_t vb = va + 1; vb < n; ++vb)
          consider(RawWarp{{{mesh[a], mesh[va]}, {mesh[b], mesh[vb]}}});
  // Three knots only at jump-relevant positions to keep the sweep tractable.
  std::vector<double> pos;
  for (double x : f.jumps()) pos.push_back(x);
  for (double u : g.jumps()) pos.push_back(u);
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  const std::size_t np = pos.size();
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a + 1; b < np; ++b)
      for (std::size_t c = b + 1; c < np; ++c)
        for (std::size_t va = 0; va < n; ++va)
          for (std::size_t vb = va + 1; vb < n; ++vb)
            for (std::size_t vc = vb + 1; vc < n; ++vc)
              consider(RawWarp{{{pos[a], mesh[va]},
                                {pos[b], mesh[vb]},
                                {pos[c], mesh[vc]}}});

  // Compass refinement over every knot coordinate of the best candidates.
  for (RawWarp w : top) {
    double step = 0.05 * (hi - lo);
    double value = raw_objective(f, g, w);
    while (step > 1e-10) {
      bool improved = false;
      for (std::size_t k = 0; k < w.knots.size(); ++k) {
        for (int coord = 0; coord < 2; ++coord) {
          for (double dir : {-1.0, 1.0}) {
            RawWarp trial = w;
            (coord == 0 ? trial.knots[k].first : trial.knots[k].second) += dir * step;
            double v = raw_objective(f, g, trial);
            if (v < value - 1e-15) {
              value = v;
              w = trial;
              improved = true;
            }
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    best = std::min(best, value);
  }
  return best;
}

inline smx::StepFunction random_step(smx::Rng& rng, int max_jumps, double lo = -1.0,
                                     double hi = 1.0) {
  int k = static_cast<int>(rng.uniform() * (max_jumps + 1));
  std::vector<double> jumps;
  for (int i = 0; i < k; ++i) jumps.push_back(rng.uniform(lo + 0.05, hi - 0.05));
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  std::vector<double> values;
  for (std::size_t i = 0; i <= jumps.size(); ++i) values.push_back(rng.normal());
  return smx::StepFunction(smx::Interval(lo, hi), std::move(jumps), std::move(values));
}

}  // namespace smx_test

#endif  // SMX_TESTS_ORACLES_HPP_
