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

#include "hhl/inversion.hpp"

#include <algorithm>
#include <cmath>

namespace hhl {

namespace {

double arcsin_target(double c_rotation, double x, std::size_t* clamped) {
  double u = c_rotation / x;
  if (u > 1.0) {
    u = 1.0;  // reachable only at interval edges by rounding
    if (clamped) ++*clamped;
  }
  return std::asin(u);
}

}  // namespace

std::vector<double> chebyshev_fit(double lo, double hi, unsigned degree, double c_rotation,
                                  std::size_t* clamped_nodes) {
  if (lo <= 0 || hi <= lo) throw Error("bad interpolation interval");
  const unsigned n_nodes = degree + 1;
  std::vector<double> values(n_nodes);
  for (unsigned k = 0; k < n_nodes; ++k) {
    const double u = std::cos((2.0 * k + 1.0) * kPi / (2.0 * n_nodes));
    const double x = 0.5 * (u + 1.0) * (hi - lo) + lo;
    values[k] = arcsin_target(c_rotation, x, clamped_nodes);
  }
  // Chebyshev coefficients from the node values (discrete orthogonality).
  std::vector<double> coeffs(n_nodes, 0.0);
  for (unsigned j = 0; j < n_nodes; ++j) {
    double acc = 0;
    for (unsigned k = 0; k < n_nodes; ++k)
      acc += values[k] * std::cos(j * (2.0 * k + 1.0) * kPi / (2.0 * n_nodes));
    coeffs[j] = 2.0 * acc / n_nodes;
  }
  coeffs[0] /= 2.0;
  return coeffs;
}

double chebyshev_eval(const std::vector<double>& coeffs, double lo, double hi, double x) {
  const double u = 2.0 * (x - lo) / (hi - lo) - 1.0;
  // Clenshaw recurrence
  double b1 = 0, b2 = 0;
  for (std::size_t j = coeffs.size(); j-- > 1;) {
    const double b0 = 2.0 * u * b1 - b2 + coeffs[j];
    b2 = b1;
    b1 = b0;
  }
  return u * b1 - b2 + coeffs[0];
}

PiecewiseChebyshev PiecewiseChebyshev::fit(double a_start, double domain_end,
                                           unsigned degree, double c_rotation) {
  if (a_start <= 0) throw Error("a_start must be positive");
  if (domain_end <= a_start) throw Error("empty interpolation domain");

  PiecewiseChebyshev pc;
  pc.a_start = a_start;
  pc.c_rotation = c_rotation;
  pc.degree = degree;

  const std::size_t n_intervals = static_cast<std::size_t>(
      std::ceil(std::log(domain_end / a_start) / std::log(5.0) - 1e-12));
  double lo = a_start;
  for (std::size_t i = 0; i < std::max<std::size_t>(n_intervals, 1); ++i) {
    Interval interval;
    interval.lo = lo;
    interval.hi = lo * 5.0;
    interval.cheb_coeffs =
        chebyshev_fit(interval.lo, interval.hi, degree, c_rotation, &pc.clamped_nodes);
    pc.intervals.push_back(std::move(interval));
    lo *= 5.0;
  }
  return pc;
}

double PiecewiseChebyshev::evaluate(double x) const {
  const double clamped =
      std::clamp(x, intervals.front().lo, intervals.back().hi);
  for (const Interval& interval : intervals)
    if (clamped <= interval.hi || &interval == &intervals.back())
      return chebyshev_eval(interval.cheb_coeffs, interval.lo, interval.hi, clamped);
  return 0;  // unreachable
}

double arcsin_interpolation_bound(double a_start, double c_rotation, unsigned degree) {
  if (a_start <= 0) throw Error("a_start must be positive");
  const double ratio = 2.0 * c_rotation / a_start;
  const double r = ratio + std::sqrt(std::abs(1.0 - ratio * ratio));
  const double log_r = std::log(r);
  const double magnitude = std::sqrt(log_r * log_r + (kPi / 2.0) * (kPi / 2.0));
  return 8.13 * magnitude /
         (std::pow(2.0, static_cast<double>(degree) + 1.0) - 1.0);
}

double arcsin_magnitude(double x) {
  const double ax = std::abs(x);
  if (ax <= 1.0) return std::abs(std::asin(x));
  const double r = ax + std::sqrt(ax * ax - 1.0);
  const double log_r = std::log(r);
  return std::sqrt(log_r * log_r + (kPi / 2.0) * (kPi / 2.0));
}

InversionParams derive_params(double kappa, double eps_R, double t, double lambda_min) {
  if (eps_R <= 0 || eps_R >= 1) throw Error("eps_R must lie in (0,1)");
  if (kappa < 1) throw Error("kappa must be >= 1");

  InversionParams params;
  params.eps_R = eps_R;
  params.eps_C = eps_R / (2.0 * (2.0 * kappa * kappa - eps_R));
  const double level = 2.0 * (2.0 * kappa * kappa - eps_R) / eps_R + 1.0;
  params.n_l = 3 * (static_cast<unsigned>(std::floor(std::log2(level))) + 1);
  const double n_big = std::pow(2.0, static_cast<double>(params.n_l));
  params.c_prime = n_big * t * lambda_min / (2.0 * kPi);
  params.c_scale = lambda_min;
  params.a_start = std::pow(2.0, 2.0 * static_cast<double>(params.n_l) / 3.0);

  const double ratio = 2.0 * params.c_prime / params.a_start;
  const double r = ratio + std::sqrt(std::abs(1.0 - ratio * ratio));
  const double magnitude =
      std::sqrt(std::log(r) * std::log(r) + (kPi / 2.0) * (kPi / 2.0));
  params.degree = static_cast<unsigned>(std::floor(std::log2(
      1.0 + 16.23 * magnitude * kappa * (2.0 * kappa - eps_R) / eps_R)));
  return params;
}

std::vector<double> rotation_angles(const PiecewiseChebyshev& pc, unsigned n_l) {
  const std::size_t n = (std::size_t{1} << n_l) - 1;
  std::vector<double> angles(n);
  for (std::size_t v = 1; v <= n; ++v)
    angles[v - 1] = static_cast<double>(v) < pc.a_start ? kPi / 2.0
                                                        : pc.evaluate(static_cast<double>(v));
  return angles;
}

std::vector<double> exact_rotation_angles(double c_prime, double a_start, unsigned n_l) {
  const std::size_t n = (std::size_t{1} << n_l) - 1;
  std::vector<double> angles(n);
  for (std::size_t v = 1; v <= n; ++v) {
    const double x = static_cast<double>(v);
    angles[v - 1] =
        x < a_start ? kPi / 2.0 : std::asin(std::min(1.0, c_prime / x));
  }
  return angles;
}

QuantumCircuit rotation_circuit_from_angles(const std::vector<double>& angles,
                                            unsigned n_l, unsigned width,
                                            unsigned counting0, unsigned ancilla) {
  if (angles.size() != (std::size_t{1} << n_l) - 1)
    throw Error("one angle per nonzero register value required");
  QuantumCircuit circuit(width);
  for (std::size_t v = 1; v < (std::size_t{1} << n_l); ++v) {
    std::vector<Control> controls;
    controls.reserve(n_l);
    for (unsigned s = 0; s < n_l; ++s)
      controls.push_back({counting0 + s, (v & (std::size_t{1} << s)) != 0});
    circuit.ry(2.0 * angles[v - 1], ancilla, std::move(controls));
  }
  return circuit;
}

QuantumCircuit rotation_circuit(const PiecewiseChebyshev& pc, unsigned n_l, unsigned width,
                                unsigned counting0, unsigned ancilla) {
  return rotation_circuit_from_angles(rotation_angles(pc, n_l), n_l, width, counting0,
                                      ancilla);
}

double success_probability(double kappa, double eps_R) {
  if (eps_R >= 1) throw Error("eps_R must be < 1");
  const double p = (1.0 - eps_R) / kappa;
  return p * p;
}

}  // namespace hhl
