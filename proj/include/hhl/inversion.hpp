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

#ifndef HHL_INVERSION_HPP
#define HHL_INVERSION_HPP

#include <vector>

#include "hhl/statevector.hpp"

namespace hhl {

// Piecewise Chebyshev interpolant of arcsin(C/x) on exponentially growing
// intervals [a_i, 5 a_i] starting at a_start. Where C/x > 1 the fit target
// clamps the argument to 1; clamped node evaluations are counted.
struct PiecewiseChebyshev {
  struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> cheb_coeffs;  // Chebyshev-basis coefficients
  };

  double a_start = 0.0;
  double c_rotation = 0.0;  // the C inside arcsin(C/x)
  unsigned degree = 0;
  std::vector<Interval> intervals;
  std::size_t clamped_nodes = 0;

  // Interpolant value; x is clamped into the covered range.
  double evaluate(double x) const;

  // Intervals covering [a_start, domain_end]; adjacent intervals meet at
  // exact 5-fold points.
  static PiecewiseChebyshev fit(double a_start, double domain_end, unsigned degree,
                                double c_rotation);
};

// Degree-d Chebyshev interpolation of arcsin(C/x) on [lo, hi];
// coefficients in the Chebyshev basis of the mapped variable.
std::vector<double> chebyshev_fit(double lo, double hi, unsigned degree, double c_rotation,
                                  std::size_t* clamped_nodes = nullptr);
double chebyshev_eval(const std::vector<double>& coeffs, double lo, double hi, double x);

// Interpolation error bound 8.13 sqrt(ln^2 r + (pi/2)^2) / (2^{d+1} - 1)
// with r = 2C/a + sqrt(|1 - (2C/a)^2|).
double arcsin_interpolation_bound(double a_start, double c_rotation, unsigned degree);

// Magnitude of the analytically continued arcsin for real |x| > 1:
// sqrt(ln^2(r) + (pi/2)^2) with r = |x| + sqrt(x^2 - 1). Falls back to
// |arcsin(x)| for |x| <= 1.
double arcsin_magnitude(double x);

// Register width, rotation constants, interval start and interpolation
// degree that keep the inversion error within eps_R.
struct InversionParams {
  unsigned n_l = 0;
  double eps_R = 0.0;
  double eps_C = 0.0;
  double c_prime = 0.0;  // register-domain rotation constant 2^{n_l} t lambda_min / 2 pi
  double c_scale = 0.0;  // lambda_min; the C used in observable scaling
  double a_start = 0.0;  // 2^{2 n_l / 3}
  unsigned degree = 0;
};

InversionParams derive_params(double kappa, double eps_R, double t, double lambda_min);

// Conditioned Ry(2 theta_v) onto `ancilla` for every counting-register
// value v in [1, 2^{n_l}-1]; angles[v-1] = theta_v. Value 0 is untouched.
QuantumCircuit rotation_circuit_from_angles(const std::vector<double>& angles,
                                            unsigned n_l, unsigned width,
                                            unsigned counting0, unsigned ancilla);

// Angles from the piecewise interpolant: theta_v = pi/2 below a_start
// (identity region, amplitude 1), p_f(v) above.
std::vector<double> rotation_angles(const PiecewiseChebyshev& pc, unsigned n_l);

// Exact-angle variant theta_v = arcsin(min(C/v, 1)).
std::vector<double> exact_rotation_angles(double c_prime, double a_start, unsigned n_l);

QuantumCircuit rotation_circuit(const PiecewiseChebyshev& pc, unsigned n_l, unsigned width,
                                unsigned counting0, unsigned ancilla);

// Lower bound ((1 - eps_R)/kappa)^2 on the inversion post-selection
// probability.
double success_probability(double kappa, double eps_R);

}  // namespace hhl

#endif  // HHL_INVERSION_HPP
