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

#ifndef HHL_STATE_PREP_HPP
#define HHL_STATE_PREP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hhl/statevector.hpp"
#include "hhl/toeplitz.hpp"

namespace hhl {

// p(x) rewritten over qubit bits: x = sum_k q_k 2^k * grid_scale reduces,
// via q_k^2 = q_k, to a sum of subset terms  sum_S coef(S) prod_{k in S} q_k.
// Subsets are encoded as bitmasks over qubits.
struct MultilinearExpansion {
  unsigned n = 0;
  std::map<std::uint64_t, double> terms;

  // Value of the multilinear form at the bit pattern of `bits`.
  double evaluate(std::uint64_t bits) const;
};

// Expansion over the grid x_i = i/(2^n - 1).
MultilinearExpansion expand_multilinear(const std::vector<double>& poly, unsigned n);

// Expansion over the grid x_i = i * grid_scale (scale 1 gives the integer
// grid 0..2^n-1).
MultilinearExpansion expand_multilinear(const std::vector<double>& poly, unsigned n,
                                        double grid_scale);

// Loader for amplitudes sin(c * poly(x_i)) on the |1> branch of an ancilla.
struct LoaderConfig {
  std::vector<double> poly;  // ascending coefficients of p_f
  double c = 1.0;            // rescaling constant in (0, 1]
  unsigned n_b = 1;
};

// Hadamards on the n_b data qubits followed by one |S|-controlled
// Ry(2 c coef(S)) per nonzero subset term, targeting the ancilla (qubit
// n_b). The ancilla |1>-amplitude of branch i is sin(c p_f(x_i))/sqrt(N).
QuantumCircuit build_loader(const LoaderConfig& config);

// Exact post-selection probability of the loader (ancilla reads 1).
double loader_success_probability(const LoaderConfig& config);

// Guaranteed lower bound c^2 |b|^2 / (N |b|_inf^2) - c^2 eps_p on the
// success probability.
double success_probability_bound(const LoaderConfig& config, double norm_b,
                                 double norm_b_inf, double eps_p);

// Bound 4 kappa sqrt(N) |b|_inf (eps_p + c^2) / |b| on the solution error
// contributed by approximate state preparation alone. eps_p is the grid
// sup-error of the fit behind LoaderConfig::poly (zero for an exact rhs).
double state_prep_error_bound(const LoaderConfig& config,
                              const ClassicalSolution& classical, double eps_p);

struct PolynomialFit {
  std::vector<double> coeffs;  // ascending, degree d
  double eps_p = 0.0;          // sup deviation from f/|b|_inf on the grid
  double norm_inf = 0.0;       // |b|_inf measured on the grid
};

// Chebyshev interpolation of f/|b|_inf on [0,1] at degree+1 Chebyshev
// nodes; eps_p is the maximum deviation over the grid x_i = i/(grid_n-1).
PolynomialFit fit_polynomial(const std::function<double(double)>& f, unsigned degree,
                             std::size_t grid_n);

}  // namespace hhl

#endif  // HHL_STATE_PREP_HPP
