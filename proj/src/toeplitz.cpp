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

#include "hhl/toeplitz.hpp"

#include <algorithm>
#include <cmath>

namespace hhl {

namespace {
constexpr unsigned kEvolutionQubitCap = 10;

double singular_tolerance(const TridiagonalToeplitz& m) {
  return 1e-12 * (std::abs(m.a) + 2 * std::abs(m.b) + 1.0);
}
}  // namespace

double TridiagonalToeplitz::eigenvalue(std::size_t j) const {
  if (j < 1 || j > dim()) throw Error("eigenvalue index out of range");
  const double theta = static_cast<double>(j) * kPi / (static_cast<double>(dim()) + 1.0);
  return a - 2.0 * b * std::cos(theta);
}

Eigen::VectorXd TridiagonalToeplitz::sine_eigenvector(std::size_t j) const {
  if (j < 1 || j > dim()) throw Error("eigenvector index out of range");
  const std::size_t n = dim();
  const double theta = static_cast<double>(j) * kPi / (static_cast<double>(n) + 1.0);
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  const double scale = std::sqrt(2.0 / (static_cast<double>(n) + 1.0));
  for (std::size_t i = 0; i < n; ++i)
    v(static_cast<Eigen::Index>(i)) = scale * std::sin(static_cast<double>(i + 1) * theta);
  return v;
}

Eigen::MatrixXd TridiagonalToeplitz::matrix() const {
  const Eigen::Index n = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = a;
    if (i + 1 < n) {
      m(i, i + 1) = b;
      m(i + 1, i) = b;
    }
  }
  return m;
}

Eigen::MatrixXcd TridiagonalToeplitz::evolution(double t) const {
  if (n_b > kEvolutionQubitCap) throw Error("evolution capped at 10 qubits");
  const std::size_t n = dim();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (std::size_t j = 1; j <= n; ++j) {
    // natural pair: sine_eigenvector(j) <-> a + 2b cos(j pi/(N+1))
    const double theta = static_cast<double>(j) * kPi / (static_cast<double>(n) + 1.0);
    const double lambda = a + 2.0 * b * std::cos(theta);
    const Eigen::VectorXd v = sine_eigenvector(j);
    u += std::exp(cdouble(0, 1) * lambda * t) * (v * v.transpose()).cast<cdouble>();
  }
  return u;
}

SpectrumSummary spectrum_summary(const TridiagonalToeplitz& matrix) {
  SpectrumSummary s;
  double abs_min = 0, abs_max = 0;
  for (std::size_t j = 1; j <= matrix.dim(); ++j) {
    const double lambda = matrix.eigenvalue(j);
    if (j == 1) {
      s.lambda_min = s.lambda_max = lambda;
      abs_min = abs_max = std::abs(lambda);
    } else {
      s.lambda_min = std::min(s.lambda_min, lambda);
      s.lambda_max = std::max(s.lambda_max, lambda);
      abs_min = std::min(abs_min, std::abs(lambda));
      abs_max = std::max(abs_max, std::abs(lambda));
    }
  }
  if (abs_min <= singular_tolerance(matrix)) throw SingularSystem();
  s.positive_definite = s.lambda_min > 0;
  s.kappa = s.positive_definite ? s.lambda_max / s.lambda_min : abs_max / abs_min;

  if (std::abs(s.lambda_max) > std::abs(matrix.a) + 2 * std::abs(matrix.b) + 1e-12)
    throw Error("spectral bound violated");
  return s;
}

RhsSpec RhsSpec::poly(std::vector<double> coefficients) {
  RhsSpec r;
  r.type = Type::kPoly;
  r.data = std::move(coefficients);
  if (r.data.empty()) throw Error("empty polynomial");
  return r;
}

RhsSpec RhsSpec::vector(std::vector<double> values) {
  RhsSpec r;
  r.type = Type::kVector;
  r.data = std::move(values);
  if (r.data.empty()) throw Error("empty rhs vector");
  return r;
}

double RhsSpec::evaluate_poly(double x) const {
  if (type != Type::kPoly) throw Error("rhs is not a polynomial");
  double value = 0;
  for (auto it = data.rbegin(); it != data.rend(); ++it) value = value * x + *it;
  return value;
}

std::vector<double> RhsSpec::values(std::size_t n) const {
  std::vector<double> out(n);
  if (type == Type::kVector) {
    if (data.size() != n) throw Error("rhs vector length mismatch");
    out = data;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = n > 1 ? static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
      out[i] = evaluate_poly(x);
    }
  }
  double max_abs = 0;
  for (double v : out) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs == 0) throw Error("rhs is identically zero on the grid");
  return out;
}

ClassicalSolution solve_classical(const TridiagonalToeplitz& matrix, const RhsSpec& rhs) {
  const SpectrumSummary spectrum = spectrum_summary(matrix);  // rejects singular
  const std::size_t n = matrix.dim();
  const std::vector<double> b_values = rhs.values(n);

  // Thomas algorithm with constant coefficients.
  std::vector<double> upper(n, 0.0), work(n, 0.0);
  double pivot = matrix.a;
  if (std::abs(pivot) < 1e-14) throw Error("thomas-breakdown");
  upper[0] = matrix.b / pivot;
  work[0] = b_values[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = matrix.a - matrix.b * upper[i - 1];
    if (std::abs(pivot) < 1e-14) throw Error("thomas-breakdown");
    upper[i] = matrix.b / pivot;
    work[i] = (b_values[i] - matrix.b * work[i - 1]) / pivot;
  }
  Eigen::VectorXd x(static_cast<Eigen::Index>(n));
  x(static_cast<Eigen::Index>(n - 1)) = work[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    x(static_cast<Eigen::Index>(i)) =
        work[i] - upper[i] * x(static_cast<Eigen::Index>(i + 1));

  ClassicalSolution sol;
  sol.x_raw = x;
  sol.norm_x = x.norm();
  Eigen::VectorXd b_vec(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) b_vec(static_cast<Eigen::Index>(i)) = b_values[i];
  sol.norm_b = b_vec.norm();
  sol.norm_b_inf = b_vec.cwiseAbs().maxCoeff();
  sol.kappa = spectrum.kappa;
  sol.x_normalized = sol.norm_x > 0 ? (x / sol.norm_x).eval() : x;

  const double residual = (matrix.matrix() * x - b_vec).norm() / sol.norm_b;
  if (residual > 1e-10) throw Error("classical solve residual too large");
  return sol;
}

}  // namespace hhl
