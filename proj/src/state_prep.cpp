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

#include "hhl/state_prep.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace hhl {

namespace {

double poly_eval(const std::vector<double>& coeffs, double x) {
  double value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * x + *it;
  return value;
}

// Subsets of {0..n-1} in increasing size, lexicographic within a size.
void for_each_subset_up_to(unsigned n, unsigned max_size,
                           const std::function<void(std::uint64_t)>& visit) {
  visit(0);
  for (unsigned size = 1; size <= std::min(max_size, n); ++size) {
    std::vector<unsigned> members(size);
    for (unsigned i = 0; i < size; ++i) members[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (unsigned m : members) mask |= std::uint64_t{1} << m;
      visit(mask);
      // next combination
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && members[static_cast<unsigned>(pos)] ==
                             n - size + static_cast<unsigned>(pos))
        --pos;
      if (pos < 0) break;
      members[static_cast<unsigned>(pos)]++;
      for (unsigned i = static_cast<unsigned>(pos) + 1; i < size; ++i)
        members[i] = members[i - 1] + 1;
    }
  }
}

}  // namespace

double MultilinearExpansion::evaluate(std::uint64_t bits) const {
  double value = 0;
  for (const auto& [mask, coef] : terms)
    if ((bits & mask) == mask) value += coef;
  return value;
}

MultilinearExpansion expand_multilinear(const std::vector<double>& poly, unsigned n) {
  const double denom = static_cast<double>((std::uint64_t{1} << n) - 1);
  return expand_multilinear(poly, n, 1.0 / denom);
}

MultilinearExpansion expand_multilinear(const std::vector<double>& poly, unsigned n,
                                        double grid_scale) {
  if (n == 0) throw Error("expansion needs at least one qubit");
  if (poly.empty()) throw Error("empty polynomial");
  const unsigned degree = static_cast<unsigned>(poly.size() - 1);

  MultilinearExpansion expansion;
  expansion.n = n;

  // Moebius inversion over the subset lattice: coefficients of a degree-d
  // polynomial vanish on subsets larger than d, so only those are visited.
  auto p_at = [&](std::uint64_t mask) {
    return poly_eval(poly, static_cast<double>(mask) * grid_scale);
  };
  for_each_subset_up_to(n, degree, [&](std::uint64_t s) {
    double coef = 0;
    // iterate submasks of s (including 0 and s)
    std::uint64_t t = s;
    while (true) {
      const int sign_bits =
          __builtin_popcountll(s) - __builtin_popcountll(t);
      coef += ((sign_bits % 2) ? -1.0 : 1.0) * p_at(t);
      if (t == 0) break;
      t = (t - 1) & s;
    }
    if (coef != 0.0) expansion.terms[s] = coef;
  });
  if (expansion.terms.find(0) == expansion.terms.end() && poly[0] != 0.0)
    expansion.terms[0] = 0.0;
  return expansion;
}

QuantumCircuit build_loader(const LoaderConfig& config) {
  if (config.c <= 0 || config.c > 1) throw Error("rescaling constant must be in (0,1]");
  const unsigned ancilla = config.n_b;
  QuantumCircuit circuit(config.n_b + 1);
  for (unsigned q = 0; q < config.n_b; ++q) circuit.h(q);

  const MultilinearExpansion expansion = expand_multilinear(config.poly, config.n_b);
  for (const auto& [mask, coef] : expansion.terms) {
    if (coef == 0.0) continue;
    std::vector<Control> controls;
    for (unsigned q = 0; q < config.n_b; ++q)
      if (mask & (std::uint64_t{1} << q)) controls.push_back({q, true});
    circuit.ry(2.0 * config.c * coef, ancilla, std::move(controls));
  }
  return circuit;
}

double loader_success_probability(const LoaderConfig& config) {
  const std::size_t n = std::size_t{1} << config.n_b;
  const double denom = static_cast<double>(n - 1);
  double p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = n > 1 ? static_cast<double>(i) / denom : 0.0;
    const double s = std::sin(config.c * poly_eval(config.poly, x));
    p += s * s;
  }
  return p / static_cast<double>(n);
}

double success_probability_bound(const LoaderConfig& config, double norm_b,
                                 double norm_b_inf, double eps_p) {
  if (eps_p < 0) throw Error("eps_p must be nonnegative");
  const double n = static_cast<double>(std::size_t{1} << config.n_b);
  const double c2 = config.c * config.c;
  return c2 * norm_b * norm_b / (n * norm_b_inf * norm_b_inf) - c2 * eps_p;
}

double state_prep_error_bound(const LoaderConfig& config,
                              const ClassicalSolution& classical, double eps_p) {
  if (eps_p < 0) throw Error("eps_p must be nonnegative");
  const double n = static_cast<double>(std::size_t{1} << config.n_b);
  const double c2 = config.c * config.c;
  return 4.0 * classical.kappa * std::sqrt(n) * classical.norm_b_inf * (eps_p + c2) /
         classical.norm_b;
}

PolynomialFit fit_polynomial(const std::function<double(double)>& f, unsigned degree,
                             std::size_t grid_n) {
  if (grid_n < 2) throw Error("grid needs at least two points");

  PolynomialFit fit;
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(grid_n - 1);
    fit.norm_inf = std::max(fit.norm_inf, std::abs(f(x)));
  }
  if (fit.norm_inf == 0) throw Error("function vanishes on the grid");

  // Interpolate f/|b|_inf at Chebyshev nodes mapped to [0,1].
  const unsigned n_nodes = degree + 1;
  Eigen::MatrixXd vandermonde(n_nodes, n_nodes);
  Eigen::VectorXd rhs(n_nodes);
  for (unsigned k = 0; k < n_nodes; ++k) {
    const double u = std::cos((2.0 * k + 1.0) * kPi / (2.0 * n_nodes));
    const double x = 0.5 * (u + 1.0);
    double power = 1.0;
    for (unsigned j = 0; j < n_nodes; ++j) {
      vandermonde(k, j) = power;
      power *= x;
    }
    rhs(k) = f(x) / fit.norm_inf;
  }
  const Eigen::VectorXd solution = vandermonde.colPivHouseholderQr().solve(rhs);
  fit.coeffs.assign(solution.data(), solution.data() + n_nodes);

  for (std::size_t i = 0; i < grid_n; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(grid_n - 1);
    fit.eps_p = std::max(fit.eps_p,
                         std::abs(poly_eval(fit.coeffs, x) - f(x) / fit.norm_inf));
  }
  return fit;
}

}  // namespace hhl
