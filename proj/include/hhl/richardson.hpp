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

#ifndef HHL_RICHARDSON_HPP
#define HHL_RICHARDSON_HPP

#include <vector>

#include <Eigen/Dense>

#include "hhl/ham_sim.hpp"

namespace hhl {

// Multi-product formula V_l(t, m) = sum_j a_j S1^{m_j}(t/m_j) with
// sum_j a_j = 1.
struct MultiProductFormula {
  unsigned l = 1;
  std::vector<unsigned> m_vec;  // distinct positive Trotter exponents
  std::vector<double> a_vec;
};

// Closed-form coefficients a_j = prod_{q != j} m_j^2 / (m_j^2 - m_q^2).
// Invariant under uniform scaling of m_vec; throws on duplicates.
std::vector<double> mpf_coefficients(const std::vector<unsigned>& m_vec);

// Principal-branch Lambert W for x >= 0, residual |W e^W - x| <= 1e-12
// across the supported range (long-double Halley iteration inside).
double lambert_w(double x);

// Number of extrapolation points from the closed form
// l = ln(2dt/eps) / (4 W(ln(2dt/eps) / (2e sqrt(4dt)))), ceiled and floored
// at 3 (the error-bound derivation assumes l >= 3). Returns 1 when the
// requested accuracy is coarser than 2dt.
unsigned optimal_point_count(double d_norm, double t, double eps);

// 2 (2 d t)^{2l+1} / (2l+1)! * prod_i m_i^{-2}.
double mpf_error_bound(double d_norm, double t, unsigned l,
                       const std::vector<unsigned>& m_vec);

// Dense matrix of the classical combination sum_j a_j V(t, m_j); not
// unitary in general. Capped at n_b <= 6.
Eigen::MatrixXcd v_l_matrix(const ToeplitzDecomposition& decomp, double t,
                            const std::vector<unsigned>& m_vec);

// Per-power Trotter exponents for QPE: power k = 2^s uses
// m_j(k) = alpha_k * m_j with alpha_k = floor(k^{1/2l}) + 1, identical
// combination coefficients across powers.
struct ExtrapolationPlan {
  unsigned l = 1;
  unsigned n_l = 1;
  std::vector<unsigned> base_m;                 // exponents behind a_vec
  std::vector<double> a_vec;
  std::vector<unsigned> alpha;                  // alpha[s] for k = 2^s
  std::vector<std::vector<unsigned>> m_of_power;  // [s][j]
};

ExtrapolationPlan build_plan(unsigned l, unsigned n_l);

// Plan with caller-chosen base exponents. With unit_alpha_at_base the k=1
// column uses the base exponents verbatim (alpha_1 = 1, still sound since
// 1^{2l} >= 1); higher powers keep the closed-form alpha_k.
ExtrapolationPlan build_plan_with_base(const std::vector<unsigned>& base_m, unsigned n_l,
                                       bool unit_alpha_at_base);

// floor(k^{1/(2l)}) + 1 computed with exact integer arithmetic.
unsigned alpha_for_power(std::uint64_t k, unsigned l);

// sum_j a_j * values[j], elementwise for vectors.
double combine_results(const std::vector<double>& values, const std::vector<double>& a_vec);
Eigen::VectorXcd combine_results(const std::vector<Eigen::VectorXcd>& values,
                                 const std::vector<double>& a_vec);

// Accumulated Trotter-step totals (times the per-step gate cost G) of the
// sequential extrapolation scheme versus the plain scheme, plus the closed
// bound G (n_l l^2 + 2^{n_l/2l} l) on the former.
struct QpeCostModel {
  double extrapolated_cost = 0.0;
  double plain_cost = 0.0;
  double extrapolated_bound = 0.0;
};

QpeCostModel qpe_cost_model(unsigned n_l, unsigned l, double gate_cost, double eps_A,
                            double t, double abs_b);

}  // namespace hhl

#endif  // HHL_RICHARDSON_HPP
