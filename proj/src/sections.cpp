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

#include "smx/sections.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "smx/numerics.hpp"

namespace smx {
namespace {

// A general quadratic xi -> c + w.xi - xi'M xi / 2 (M symmetric, possibly
// indefinite when it encodes a section difference).
struct Quad {
  double c = 0.0;
  Vec w;
  Mat m;
};

double quad_eval(const Quad& q, const Vec& xi) {
  double v = q.c + dot(q.w, xi);
  for (std::size_t i = 0; i < xi.size(); ++i)
    for (std::size_t j = 0; j < xi.size(); ++j) v -= 0.5 * q.m[i][j] * xi[i] * xi[j];
  return v;
}

// Stationary points of q restricted to every face of the box, vertices
// included. The extremes of q (and of |q|) over the box live in this set:
// along any face either the reduced gradient vanishes at an interior point or
// the extreme sits on the face boundary, which a deeper face covers.
std::vector<Vec> quad_face_candidates(const Quad& q, const Vec& lo, const Vec& hi) {
  const std::size_t d = lo.size();
  std::vector<Vec> out;
  if (d == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> state(d, 0);  // 0 = free, 1 = at lo, 2 = at hi
  const std::size_t total = static_cast<std::size_t>(std::pow(3.0, static_cast<double>(d)));
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rem = code;
    for (std::size_t i = 0; i < d; ++i) {
      state[i] = static_cast<int>(rem % 3);
      rem /= 3;
    }
    std::vector<std::size_t> free_ix;
    Vec point(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      if (state[i] == 0)
        free_ix.push_back(i);
      else
        point[i] = state[i] == 1 ? lo[i] : hi[i];
    }
    if (free_ix.empty()) {
      out.push_back(point);
      continue;
    }
    // Solve M_ff xi_f = w_f - M_fx xi_x on the free block.
    const std::size_t nf = free_ix.size();
    Mat a(nf, Vec(nf));
    Vec b(nf);
    for (std::size_t r = 0; r < nf; ++r) {
      double rhs = q.w[free_ix[r]];
      for (std::size_t i = 0; i < d; ++i)
        if (state[i] != 0) rhs -= q.m[free_ix[r]][i] * point[i];
      b[r] = rhs;
      for (std::size_t c = 0; c < nf; ++c) a[r][c] = q.m[free_ix[r]][free_ix[c]];
    }
    auto sol = solve_linear(a, b);
    if (!sol) continue;  // flat direction: the face boundary covers it
    bool inside = true;
    for (std::size_t r = 0; r < nf; ++r) {
      double v = (*sol)[r];
      const std::size_t i = free_ix[r];
      if (v < lo[i] - 1e-12 || v > hi[i] + 1e-12) {
        inside = false;
        break;
      }
      point[i] = std::min(std::max(v, lo[i]), hi[i]);
    }
    if (inside) out.push_back(point);
  }
  return out;
}

void k2_bounds(const Rect& rect, Vec* lo, Vec* hi) {
  lo->resize(rect.k2_dim());
  hi->resize(rect.k2_dim());
  for (std::size_t i = 0; i < rect.k2_dim(); ++i) {
    (*lo)[i] = rect.k2_axis(i).lo;
    (*hi)[i] = rect.k2_axis(i).hi;
  }
}

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

Quad as_quad(const Section& s, std::size_t d) {
  Quad q;
  q.w.assign(d, 0.0);
  q.m.assign(d, Vec(d, 0.0));
  if (const auto* c = std::get_if<ConstSection>(&s)) {
    q.c = c->c;
  } else if (const auto* qs = std::get_if<QuadraticSection>(&s)) {
    q.c = qs->c;
    q.w = qs->w;
    q.m = qs->m;
  } else {
    throw std::logic_error("as_quad: grid section");
  }
  return q;
}

Quad quad_diff(const Quad& a, const Quad& b) {
  Quad d;
  d.c = a.c - b.c;
  d.w.resize(a.w.size());
  d.m.assign(a.w.size(), Vec(a.w.size()));
  for (std::size_t i = 0; i < a.w.size(); ++i) {
    d.w[i] = a.w[i] - b.w[i];
    for (std::size_t j = 0; j < a.w.size(); ++j) d.m[i][j] = a.m[i][j] - b.m[i][j];
  }
  return d;
}

double quad_abs_sup_box(const Quad& q, const Vec& lo, const Vec& hi) {
  double best = 0.0;
  for (const Vec& p : quad_face_candidates(q, lo, hi))
    best = std::max(best, std::abs(quad_eval(q, p)));
  return best;
}

// Sampled fallback for section shapes whose difference is not a quadratic
// (mixed grid/quadratic beyond two K2 dimensions). 64 intervals per axis.
double sampled_abs_sup(const Section& a, const Section& b, const Vec& lo, const Vec& hi) {
  const std::size_t d = lo.size();
  const int kSteps = 64;
  std::vector<int> ix(d, 0);
  double best = 0.0;
  Vec xi(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i)
      xi[i] = lo[i] + (hi[i] - lo[i]) * ix[i] / kSteps;
    best = std::max(best, std::abs(eval_section(a, xi) - eval_section(b, xi)));
    std::size_t k = 0;
    while (k < d && ++ix[k] > kSteps) ix[k++] = 0;
    if (k == d) break;
  }
  return best;
}

struct GridCells {
  // Per-axis merged breakpoints; every resulting cell is a box on which both
  // operands are smooth (multilinear or quadratic).
  std::vector<std::vector<double>> breaks;
};

std::vector<double> merge_axis(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Multilinear patch of a grid section on one cell, written as a Quad.
// Supported for one or two K2 dimensions (beyond that the patch carries a
// trilinear term and is not a quadratic).
Quad grid_patch_quad(const GridSection& g, const std::vector<std::size_t>& cell) {
  const std::size_t d = g.grids.size();
  auto value_at = [&](const std::vector<std::size_t>& node) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d; ++i) idx = idx * g.grids[i].size() + node[i];
    return g.values[idx];
  };
  Quad q;
  q.w.assign(d, 0.0);
  q.m.assign(d, Vec(d, 0.0));
  if (d == 1) {
    double x0 = g.grids[0][cell[0]], x1 = g.grids[0][cell[0] + 1];
    double v0 = value_at({cell[0]}), v1 = value_at({cell[0] + 1});
    double slope = (v1 - v0) / (x1 - x0);
    q.c = v0 - slope * x0;
    q.w[0] = slope;
    return q;
  }
  if (d == 2) {
    double x0 = g.grids[0][cell[0]], x1 = g.grids[0][cell[0] + 1];
    double y0 = g.grids[1][cell[1]], y1 = g.grids[1][cell[1] + 1];
    double v00 = value_at({cell[0], cell[1]});
    double v10 = value_at({cell[0] + 1, cell[1]});
    double v01 = value_at({cell[0], cell[1] + 1});
    double v11 = value_at({cell[0] + 1, cell[1] + 1});
    double dx = x1 - x0, dy = y1 - y0;
    double bx = (v10 - v00) / dx;
    double by = (v01 - v00) / dy;
    double kxy = (v11 - v10 - v01 + v00) / (dx * dy);
    // v00 + bx (x-x0) + by (y-y0) + kxy (x-x0)(y-y0)
    q.c = v00 - bx * x0 - by * y0 + kxy * x0 * y0;
    q.w[0] = bx - kxy * y0;
    q.w[1] = by - kxy * x0;
    q.m[0][1] = q.m[1][0] = -kxy;  // -1/2 xi'M xi contributes -m01 * x * y
    return q;
  }
  throw std::logic_error("grid_patch_quad: dimension > 2");
}

}  // namespace

void validate_section(const Section& s, const Rect& rect) {
  const std::size_t d = rect.k2_dim();
  if (std::holds_alternative<ConstSection>(s)) return;
  if (const auto* q = std::get_if<QuadraticSection>(&s)) {
    if (q->w.size() != d || q->m.size() != d)
      throw std::invalid_argument("QuadraticSection: dimension mismatch with K2");
    double scale = 1.0;
    for (const auto& row : q->m) {
      if (row.size() != d) throw std::invalid_argument("QuadraticSection: m not square");
      for (double v : row) scale = std::max(scale, std::abs(v));
    }
    if (!is_symmetric(q->m, 1e-12 * scale))
      throw std::invalid_argument("QuadraticSection: m must be symmetric");
    if (d > 0 && !is_positive_semidefinite(q->m, 1e-10 * scale))
      throw std::invalid_argument("QuadraticSection: m must be positive semidefinite");
    return;
  }
  const auto& g = std::get<GridSection>(s);
  if (d == 0 || g.grids.size() != d)
    throw std::invalid_argument("GridSection: dimension mismatch with K2");
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    const auto& axis = g.grids[i];
    if (axis.size() < 2) throw std::invalid_argument("GridSection: axis needs >= 2 points");
    for (std::size_t j = 1; j < axis.size(); ++j)
      if (!(axis[j] > axis[j - 1]))
        throw std::invalid_argument("GridSection: grid must be strictly increasing");
    if (axis.front() != rect.k2_axis(i).lo || axis.back() != rect.k2_axis(i).hi)
      throw std::invalid_argument("GridSection: grid must span the K2 axis");
    total *= axis.size();
  }
  if (g.values.size() != total)
    throw std::invalid_argument("GridSection: values size mismatch");
}

double eval_section(const Section& s, const std::vector<double>& xi) {
  if (const auto* c = std::get_if<ConstSection>(&s)) return c->c;
  if (const auto* q = std::get_if<QuadraticSection>(&s)) {
    double v = q->c;
    for (std::size_t i = 0; i < xi.size(); ++i) {
      v += q->w[i] * xi[i];
      for (std::size_t j = 0; j < xi.size(); ++j) v -= 0.5 * q->m[i][j] * xi[i] * xi[j];
    }
    return v;
  }
  const auto& g = std::get<GridSection>(s);
  const std::size_t d = g.grids.size();
  std::vector<std::size_t> cell(d);
  Vec frac(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& axis = g.grids[i];
    auto it = std::upper_bound(axis.begin(), axis.end(), xi[i]);
    std::size_t k = static_cast<std::size_t>(it - axis.begin());
    if (k == 0) k = 1;
    if (k >= axis.size()) k = axis.size() - 1;
    cell[i] = k - 1;
    frac[i] = (xi[i] - axis[k - 1]) / (axis[k] - axis[k - 1]);
  }
  double v = 0.0;
  for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
    double wgt = 1.0;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d; ++i) {
      bool high = (corner >> i) & 1u;
      wgt *= high ? frac[i] : 1.0 - frac[i];
      idx = idx * g.grids[i].size() + cell[i] + (high ? 1 : 0);
    }
    v += wgt * g.values[idx];
  }
  return v;
}

bool sections_identical(const Section& a, const Section& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ca = std::get_if<ConstSection>(&a))
    return ca->c == std::get<ConstSection>(b).c;
  if (const auto* qa = std::get_if<QuadraticSection>(&a)) {
    const auto& qb = std::get<QuadraticSection>(b);
    return qa->c == qb.c && qa->w == qb.w && qa->m == qb.m;
  }
  const auto& ga = std::get<GridSection>(a);
  const auto& gb = std::get<GridSection>(b);
  return ga.grids == gb.grids && ga.values == gb.values;
}

SectionMax section_max(const Section& s, const Rect& rect) {
  const std::size_t d = rect.k2_dim();
  Vec lo, hi;
  k2_bounds(rect, &lo, &hi);
  SectionMax out;
  if (d == 0) {
    out.sup = eval_section(s, {});
    out.unique = true;
    return out;
  }
  if (const auto* g = std::get_if<GridSection>(&s)) {
    // Multilinear interpolants attain their extremes at grid nodes; a local
    // bisection pass around the best cells confirms there is no interior
    // plateau artifact.
    const std::size_t n = g->values.size();
    double sup = g->values[0];
    for (double v : g->values) sup = std::max(sup, v);
    const double tol = 1e-12 * (1.0 + std::abs(sup));
    std::vector<std::size_t> attain;
    for (std::size_t i = 0; i < n; ++i)
      if (g->values[i] >= sup - tol) attain.push_back(i);
    auto decode = [&](std::size_t idx) {
      Vec p(d);
      for (std::size_t i = d; i-- > 0;) {
        p[i] = g->grids[i][idx % g->grids[i].size()];
        idx /= g->grids[i].size();
      }
      return p;
    };
    out.sup = sup;
    out.argmax_lexmin = decode(attain.front());
    out.argmax_lexmax = decode(attain.back());
    // One level of midpoint refinement around the best node.
    Vec probe = out.argmax_lexmin;
    for (std::size_t i = 0; i < d; ++i) {
      for (int dir = -1; dir <= 1; dir += 2) {
        Vec q = probe;
        const auto& axis = g->grids[i];
        auto it = std::lower_bound(axis.begin(), axis.end(), probe[i]);
        std::size_t k = static_cast<std::size_t>(it - axis.begin());
        if (dir < 0 && k > 0) q[i] = 0.5 * (axis[k - 1] + axis[k]);
        if (dir > 0 && k + 1 < axis.size()) q[i] = 0.5 * (axis[k] + axis[k + 1]);
        out.sup = std::max(out.sup, eval_section(s, q));
      }
    }
    out.unique = attain.size() == 1;
    return out;
  }
  Quad q = as_quad(s, d);
  auto candidates = quad_face_candidates(q, lo, hi);
  double sup = -std::numeric_limits<double>::infinity();
  for (const Vec& p : candidates) sup = std::max(sup, quad_eval(q, p));
  const double tol = 1e-12 * (1.0 + std::abs(sup));
  Vec lexmin, lexmax;
  for (const Vec& p : candidates) {
    if (quad_eval(q, p) < sup - tol) continue;
    if (lexmin.empty() || lex_less(p, lexmin)) lexmin = p;
    if (lexmax.empty() || lex_less(lexmax, p)) lexmax = p;
  }
  out.sup = sup;
  out.argmax_lexmin = lexmin;
  out.argmax_lexmax = lexmax;
  out.unique = true;
  for (std::size_t i = 0; i < d; ++i)
    if (std::abs(lexmin[i] - lexmax[i]) > 1e-9) out.unique = false;
  return out;
}

double section_diff_sup(const Section& a, const Section& b, const Rect& rect) {
  const std::size_t d = rect.k2_dim();
  Vec lo, hi;
  k2_bounds(rect, &lo, &hi);
  if (d == 0) return std::abs(eval_section(a, {}) - eval_section(b, {}));

  const bool a_grid = std::holds_alternative<GridSection>(a);
  const bool b_grid = std::holds_alternative<GridSection>(b);
  if (!a_grid && !b_grid) {
    if (d <= 3) return quad_abs_sup_box(quad_diff(as_quad(a, d), as_quad(b, d)), lo, hi);
    return sampled_abs_sup(a, b, lo, hi);
  }
  if (a_grid && b_grid) {
    const auto& ga = std::get<GridSection>(a);
    const auto& gb = std::get<GridSection>(b);
    GridCells cells;
    for (std::size_t i = 0; i < d; ++i)
      cells.breaks.push_back(merge_axis(ga.grids[i], gb.grids[i]));
    // The difference is multilinear on every merged cell, so the sup sits on
    // a merged node.
    std::vector<std::size_t> ix(d, 0);
    Vec xi(d);
    double best = 0.0;
    while (true) {
      for (std::size_t i = 0; i < d; ++i) xi[i] = cells.breaks[i][ix[i]];
      best = std::max(best, std::abs(eval_section(a, xi) - eval_section(b, xi)));
      std::size_t k = 0;
      while (k < d && ++ix[k] >= cells.breaks[k].size()) ix[k++] = 0;
      if (k == d) break;
    }
    return best;
  }
  // Mixed grid/quadratic.
  const auto& g = std::get<GridSection>(a_grid ? a : b);
  const Section& other = a_grid ? b : a;
  if (d > 2) return sampled_abs_sup(a, b, lo, hi);
  Quad qo = as_quad(other, d);
  double best = 0.0;
  std::vector<std::size_t> cell(d, 0);
  while (true) {
    Quad patch = grid_patch_quad(g, cell);
    Quad diff = a_grid ? quad_diff(patch, qo) : quad_diff(qo, patch);
    Vec clo(d), chi(d);
    for (std::size_t i = 0; i < d; ++i) {
      clo[i] = g.grids[i][cell[i]];
      chi[i] = g.grids[i][cell[i] + 1];
    }
    best = std::max(best, quad_abs_sup_box(diff, clo, chi));
    std::size_t k = 0;
    while (k < d && ++cell[k] >= g.grids[k].size() - 1) cell[k++] = 0;
    if (k == d) break;
  }
  return best;
}

}  // namespace smx
