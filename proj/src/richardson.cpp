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

#include "hhl/richardson.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hhl {

std::vector<double> mpf_coefficients(const std::vector<unsigned>& m_vec) {
  if (m_vec.empty()) throw Error("empty exponent vector");
  if (std::set<unsigned>(m_vec.begin(), m_vec.end()).size() != m_vec.size())
    throw Error("duplicate Trotter exponents");
  for (unsigned m : m_vec)
    if (m == 0) throw Error("Trotter exponents must be positive");

  std::vector<double> a(m_vec.size());
  for (std::size_t j = 0; j < m_vec.size(); ++j) {
    const double mj2 = static_cast<double>(m_vec[j]) * m_vec[j];
    double prod = 1.0;
    for (std::size_t q = 0; q < m_vec.size(); ++q) {
      if (q == j) continue;
      const double mq2 = static_cast<double>(m_vec[q]) * m_vec[q];
      prod *= mj2 / (mj2 - mq2);
    }
    a[j] = prod;
  }
  double sum = 0;
  for (double v : a) sum += v;
  if (std::abs(sum - 1.0) > 1e-12) throw Error("coefficient sum check failed");
  return a;
}

double lambert_w(double x) {
  if (x < 0) throw Error("lambert_w defined for x >= 0 here");
  if (x == 0) return 0.0;

  long double w = x < 2.718281828459045L
                      ? static_cast<long double>(x) / (1.0L + static_cast<long double>(x))
                      : std::log(static_cast<long double>(x)) -
                            std::log(std::log(static_cast<long double>(x)));
  if (w <= 0) w = 1e-30L;
  const long double target = static_cast<long double>(x);
  for (int iter = 0; iter < 200; ++iter) {
    const long double ew = std::exp(w);
    const long double f = w * ew - target;
    if (std::abs(f) <= 1e-14L * std::max(1.0L, std::abs(target))) break;
    const long double denom = ew * (w + 1.0L) - (w + 2.0L) * f / (2.0L * w + 2.0L);
    w -= f / denom;
  }
  return static_cast<double>(w);
}

unsigned optimal_point_count(double d_norm, double t, double eps) {
  if (eps <= 0) throw Error("eps must be positive");
  const double dt2 = 2.0 * d_norm * t;
  if (dt2 / eps <= 1.0) return 1;  // accuracy coarser than the leading scale
  const double log_term = std::log(dt2 / eps);
  const double w_arg = log_term / (2.0 * std::exp(1.0) * std::sqrt(2.0 * dt2));
  const double l = log_term / (4.0 * lambert_w(w_arg));
  if (!std::isfinite(l) || l <= 0) return 1;
  return std::max<unsigned>(3, static_cast<unsigned>(std::ceil(l - 1e-12)));
}

double mpf_error_bound(double d_norm, double t, unsigned l,
                       const std::vector<unsigned>& m_vec) {
  if (m_vec.size() != l) throw Error("m_vec length must equal l");
  long double bound = 2.0L;
  const long double base = 2.0L * static_cast<long double>(d_norm) * std::abs(t);
  for (unsigned i = 1; i <= 2 * l + 1; ++i) bound *= base / static_cast<long double>(i);
  for (unsigned m : m_vec) bound /= static_cast<long double>(m) * m;
  return static_cast<double>(bound);
}

Eigen::MatrixXcd v_l_matrix(const ToeplitzDecomposition& decomp, double t,
                            const std::vector<unsigned>& m_vec) {
  if (decomp.n_b > 6) throw Error("v_l_matrix capped at 6 qubits");
  const std::vector<double> a_vec = mpf_coefficients(m_vec);
  const std::size_t n = decomp.dim();
  Eigen::MatrixXcd combined = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                     static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < m_vec.size(); ++j)
    combined += a_vec[j] * system_block(strang_circuit(decomp, t, m_vec[j]), decomp.n_b);
  return combined;
}

unsigned alpha_for_power(std::uint64_t k, unsigned l) {
  if (k == 0 || l == 0) throw Error("alpha_for_power needs k, l >= 1");
  // integer floor of k^{1/(2l)}
  std::uint64_t r = static_cast<std::uint64_t>(
      std::floor(std::pow(static_cast<double>(k), 1.0 / (2.0 * l))));
  auto pow_le = [&](std::uint64_t base) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < 2 * l; ++i) {
      if (base != 0 && acc > k / base) return false;  // overflow-safe compare
      acc *= base;
      if (acc > k) return false;
    }
    return acc <= k;
  };
  while (pow_le(r + 1)) ++r;
  while (r > 0 && !pow_le(r)) --r;
  return static_cast<unsigned>(r) + 1;
}

namespace {

ExtrapolationPlan make_plan(std::vector<unsigned> base_m, unsigned n_l,
                            bool unit_alpha_at_base) {
  if (n_l < 1) throw Error("n_l must be >= 1");
  ExtrapolationPlan plan;
  plan.l = static_cast<unsigned>(base_m.size());
  plan.n_l = n_l;
  plan.base_m = std::move(base_m);
  plan.a_vec = mpf_coefficients(plan.base_m);
  plan.alpha.resize(n_l);
  plan.m_of_power.resize(n_l);
  for (unsigned s = 0; s < n_l; ++s) {
    const std::uint64_t k = std::uint64_t{1} << s;
    unsigned alpha = alpha_for_power(k, plan.l);
    if (unit_alpha_at_base && s == 0) alpha = 1;
    plan.alpha[s] = alpha;
    plan.m_of_power[s].resize(plan.l);
    for (unsigned j = 0; j < plan.l; ++j)
      plan.m_of_power[s][j] = alpha * plan.base_m[j];
  }
  return plan;
}

}  // namespace

ExtrapolationPlan build_plan(unsigned l, unsigned n_l) {
  if (l < 1) throw Error("l must be >= 1");
  std::vector<unsigned> base(l);
  for (unsigned j = 0; j < l; ++j) base[j] = j + 1;
  return make_plan(std::move(base), n_l, false);
}

ExtrapolationPlan build_plan_with_base(const std::vector<unsigned>& base_m, unsigned n_l,
                                       bool unit_alpha_at_base) {
  return make_plan(base_m, n_l, unit_alpha_at_base);
}

double combine_results(const std::vector<double>& values, const std::vector<double>& a_vec) {
  if (values.size() != a_vec.size()) throw Error("combine dimension mismatch");
  double acc = 0;
  for (std::size_t j = 0; j < values.size(); ++j) acc += a_vec[j] * values[j];
  return acc;
}

Eigen::VectorXcd combine_results(const std::vector<Eigen::VectorXcd>& values,
                                 const std::vector<double>& a_vec) {
  if (values.size() != a_vec.size() || values.empty())
    throw Error("combine dimension mismatch");
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(values.front().size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j].size() != acc.size()) throw Error("combine dimension mismatch");
    acc += a_vec[j] * values[j];
  }
  return acc;
}

QpeCostModel qpe_cost_model(unsigned n_l, unsigned l, double gate_cost, double eps_A,
                            double t, double abs_b) {
  QpeCostModel model;
  const ExtrapolationPlan plan = build_plan(l, n_l);
  double extrapolated_steps = 0;
  for (unsigned s = 0; s < n_l; ++s)
    for (unsigned j = 0; j < l; ++j) extrapolated_steps += plan.m_of_power[s][j];
  double plain_steps = 0;
  for (unsigned s = 0; s < n_l; ++s)
    plain_steps += trotter_steps_for(1u << s, t, abs_b, eps_A);

  model.extrapolated_cost = gate_cost * extrapolated_steps;
  model.plain_cost = gate_cost * plain_steps;
  model.extrapolated_bound =
      gate_cost * (static_cast<double>(n_l) * l * l +
                   std::pow(2.0, static_cast<double>(n_l) / (2.0 * l)) * l);
  return model;
}

}  // namespace hhl
