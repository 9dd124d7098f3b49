// Copyright 2026 The hhl authors
//
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

#ifndef HHL_TOEPLITZ_HPP
#define HHL_TOEPLITZ_HPP

#include <vector>

#include <Eigen/Dense>

#include "hhl/types.hpp"

namespace hhl {

// Symmetric tridiagonal Toeplitz matrix of dimension N = 2^{n_b} with
// diagonal a and off-diagonal b.
struct TridiagonalToeplitz {
  unsigned n_b = 1;
  double a = 0.0;
  double b = 0.0;

  std::size_t dim() const { return std::size_t{1} << n_b; }

  // Closed-form eigenvalue a - 2 b cos(j pi / (N+1)) for j in [1, N].
  //
  // Index convention: the sine eigenvector family sine_eigenvector(j) is the
  // natural partner of a + 2 b cos(j pi/(N+1)), i.e. of eigenvalue(N+1-j);
  // both index the same spectrum.
  double eigenvalue(std::size_t j) const;

  // Normalized sine eigenvector u_j(i) = sqrt(2/(N+1)) sin((i+1) j pi/(N+1)),
  // i = 0..N-1; first component positive. Pairs with a + 2b cos(j pi/(N+1)).
  Eigen::VectorXd sine_eigenvector(std::size_t j) const;

  Eigen::MatrixXd matrix() const;

  // e^{iAt} via the analytic eigendecomposition; n_b <= 10.
  Eigen::MatrixXcd evolution(double t) const;
};

struct SpectrumSummary {
  double lambda_min = 0.0;  // signed extremes of the spectrum
  double lambda_max = 0.0;
  double kappa = 1.0;
  bool positive_definite = false;
};

// Min/max eigenvalue and condition number. kappa is lambda_max/lambda_min for
// positive-definite instances and |lambda|_max/|lambda|_min otherwise.
// Throws SingularSystem when an eigenvalue is numerically zero.
SpectrumSummary spectrum_summary(const TridiagonalToeplitz& matrix);

// Right-hand side: either an explicit vector or polynomial coefficients
// (ascending powers) sampled at x_i = i/(N-1).
struct RhsSpec {
  enum class Type { kPoly, kVector };

  static RhsSpec poly(std::vector<double> coefficients);
  static RhsSpec vector(std::vector<double> values);

  Type type = Type::kPoly;
  std::vector<double> data;

  // Samples the rhs for dimension N; rejects an (all-zero) rhs.
  std::vector<double> values(std::size_t n) const;
  double evaluate_poly(double x) const;  // kPoly only
};

struct ClassicalSolution {
  Eigen::VectorXd x_raw;         // solves A x = b
  Eigen::VectorXd x_normalized;  // x_raw / |x_raw|
  double norm_x = 0.0;
  double norm_b = 0.0;
  double norm_b_inf = 0.0;
  double kappa = 1.0;
};

// Thomas-algorithm reference solve; relative residual <= 1e-10 enforced.
ClassicalSolution solve_classical(const TridiagonalToeplitz& matrix, const RhsSpec& rhs);

}  // namespace hhl

#endif  // HHL_TOEPLITZ_HPP
