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

#ifndef SMX_NUMERICS_HPP_
#define SMX_NUMERICS_HPP_

#include <optional>
#include <vector>

namespace smx {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;  // dense row-major, small dims

// Gaussian elimination with partial pivoting; nullopt when singular.
std::optional<Vec> solve_linear(Mat a, Vec b);

// Cholesky factor L (lower) of an SPD matrix; nullopt if not positive
// definite within `ridge` slack added to the diagonal.
std::optional<Mat> cholesky(const Mat& a, double ridge = 0.0);

// Solves a x = b for symmetric positive definite a via Cholesky.
std::optional<Vec> cholesky_solve(const Mat& a, const Vec& b, double ridge = 0.0);

bool is_symmetric(const Mat& a, double tol);
bool is_positive_semidefinite(const Mat& a, double tol = 1e-10);
bool is_positive_definite(const Mat& a, double tol = 1e-12);

Vec mat_vec(const Mat& a, const Vec& x);
double dot(const Vec& a, const Vec& b);

}  // namespace smx

#endif  // SMX_NUMERICS_HPP_
