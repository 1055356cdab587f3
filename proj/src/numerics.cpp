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

#include "smx/numerics.hpp"

#include <cmath>
#include <cstddef>

namespace smx {

std::optional<Vec> solve_linear(Mat a, Vec b) {
  const std::size_t n = b.size();
  double scale = 0.0;
  for (const auto& row : a)
    for (double v : row) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * std::max(scale, 1.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) <= tol) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double m = a[r][col] / a[col][col];
      if (m == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= m * a[col][c];
      b[r] -= m * b[col];
    }
  }
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

std::optional<Mat> cholesky(const Mat& a, double ridge) {
  const std::size_t n = a.size();
  Mat l(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a[i][j] + (i == j ? ridge : 0.0);
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0) return std::nullopt;
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  return l;
}

std::optional<Vec> cholesky_solve(const Mat& a, const Vec& b, double ridge) {
  auto l = cholesky(a, ridge);
  if (!l) return std::nullopt;
  const std::size_t n = b.size();
  Vec y(n), x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= (*l)[i][k] * y[k];
    y[i] = s / (*l)[i][i];
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= (*l)[k][i] * x[k];
    x[i] = s / (*l)[i][i];
  }
  return x;
}

bool is_symmetric(const Mat& a, double tol) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(a[i][j] - a[j][i]) > tol) return false;
  return true;
}

bool is_positive_semidefinite(const Mat& a, double tol) {
  return cholesky(a, tol).has_value();
}

bool is_positive_definite(const Mat& a, double tol) {
  auto l = cholesky(a);
  if (!l) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((*l)[i][i] * (*l)[i][i] <= tol) return false;
  return true;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace smx
