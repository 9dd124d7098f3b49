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

#include "hhl/ham_sim.hpp"

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace hhl {

namespace {

// Ripple increment |i> -> |i+1 mod N| on the system qubits, conditioned on
// the flag: flip q_r when all lower system bits are 1.
void add_increment(QuantumCircuit& circuit, unsigned n_b, unsigned flag) {
  for (unsigned r = n_b; r-- > 0;) {
    std::vector<Control> controls{{flag, true}};
    for (unsigned low = 0; low < r; ++low) controls.push_back({low, true});
    circuit.x(r, std::move(controls));
  }
}

void add_decrement(QuantumCircuit& circuit, unsigned n_b, unsigned flag) {
  for (unsigned r = 0; r < n_b; ++r) {
    std::vector<Control> controls{{flag, true}};
    for (unsigned low = 0; low < r; ++low) controls.push_back({low, true});
    circuit.x(r, std::move(controls));
  }
}

// Toggle the flag for the two boundary states |0...0> and |1...1|.
void add_boundary_flags(QuantumCircuit& circuit, unsigned n_b, unsigned flag) {
  std::vector<Control> all_ones, all_zeros;
  for (unsigned q = 0; q < n_b; ++q) {
    all_ones.push_back({q, true});
    all_zeros.push_back({q, false});
  }
  circuit.x(flag, all_ones);
  circuit.x(flag, all_zeros);
}

QuantumCircuit exp_h3_flag(const ToeplitzDecomposition& decomp, double t) {
  const unsigned flag = decomp.n_b;
  QuantumCircuit circuit(decomp.n_b + 1);
  add_boundary_flags(circuit, decomp.n_b, flag);
  add_increment(circuit, decomp.n_b, flag);
  circuit.rx(-2.0 * decomp.b * t, 0, {{flag, true}});
  add_decrement(circuit, decomp.n_b, flag);
  add_boundary_flags(circuit, decomp.n_b, flag);
  return circuit;
}

// H3 as a product of commuting coupling classes: class j >= 1 holds the
// pairs (i, i+1) whose upper member has j trailing zero bits. A CNOT fan
// from q_j maps each pair onto a q_j flip, enabling a controlled Rx.
QuantumCircuit exp_h3_cblocks(const ToeplitzDecomposition& decomp, double t) {
  QuantumCircuit circuit(decomp.n_b + 1);
  for (unsigned j = 1; j < decomp.n_b; ++j) {
    for (unsigned r = 0; r < j; ++r) circuit.x(r, {{j, true}});
    std::vector<Control> controls;
    for (unsigned r = 0; r < j; ++r) controls.push_back({r, true});
    circuit.rx(-2.0 * decomp.b * t, j, std::move(controls));
    for (unsigned r = j; r-- > 0;) circuit.x(r, {{j, true}});
  }
  return circuit;
}

}  // namespace

Eigen::MatrixXd ToeplitzDecomposition::h2_matrix() const {
  const Eigen::Index n = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; i += 2) {
    m(i, i + 1) = b;
    m(i + 1, i) = b;
  }
  return m;
}

Eigen::MatrixXd ToeplitzDecomposition::h3_matrix() const {
  const Eigen::Index n = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i + 1 < n; i += 2) {
    m(i, i + 1) = b;
    m(i + 1, i) = b;
  }
  return m;
}

ToeplitzDecomposition decompose(const TridiagonalToeplitz& matrix) {
  return ToeplitzDecomposition{matrix.a, matrix.b, matrix.n_b};
}

QuantumCircuit exp_h1(const ToeplitzDecomposition& decomp, double t) {
  QuantumCircuit circuit(decomp.n_b + 1);
  circuit.global_phase(decomp.a * t);
  return circuit;
}

QuantumCircuit exp_h2(const ToeplitzDecomposition& decomp, double t) {
  QuantumCircuit circuit(decomp.n_b + 1);
  circuit.rx(-2.0 * decomp.b * t, 0);
  return circuit;
}

QuantumCircuit exp_h3(const ToeplitzDecomposition& decomp, double t, H3Style style) {
  if (decomp.n_b < 2) return QuantumCircuit(decomp.n_b + 1);  // H3 = 0
  return style == H3Style::kFlagIncrement ? exp_h3_flag(decomp, t)
                                          : exp_h3_cblocks(decomp, t);
}

QuantumCircuit strang_circuit(const ToeplitzDecomposition& decomp, double t, unsigned m,
                              H3Style style) {
  if (m < 1) throw Error("trotter steps must be >= 1");
  const double step = t / static_cast<double>(m);

  QuantumCircuit circuit(decomp.n_b + 1);
  circuit.append(exp_h1(decomp, t));
  circuit.append(exp_h2(decomp, step / 2.0));
  const QuantumCircuit h3 = exp_h3(decomp, step, style);
  const QuantumCircuit h2 = exp_h2(decomp, step);
  for (unsigned i = 0; i < m; ++i) {
    circuit.append(h3);
    circuit.append(h2);
  }
  circuit.append(exp_h2(decomp, -step / 2.0));
  return circuit;
}

Eigen::MatrixXcd system_block(const QuantumCircuit& circuit, unsigned n_b) {
  const Eigen::MatrixXcd full = circuit_unitary(circuit);
  const std::size_t n = std::size_t{1} << n_b;
  const std::uint64_t flag_bit = std::uint64_t{1} << n_b;
  Eigen::MatrixXcd block(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t col = 0; col < n; ++col)
      block(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          full(static_cast<Eigen::Index>(row | flag_bit),
               static_cast<Eigen::Index>(col | flag_bit));
  return block;
}

double trotter_error(const TridiagonalToeplitz& matrix, double t, unsigned m, unsigned k,
                     H3Style style) {
  if (matrix.n_b > 6) throw Error("trotter_error capped at 6 qubits");
  const ToeplitzDecomposition decomp = decompose(matrix);
  const Eigen::MatrixXcd v = system_block(strang_circuit(decomp, t, m, style), matrix.n_b);
  Eigen::MatrixXcd v_power = Eigen::MatrixXcd::Identity(v.rows(), v.cols());
  for (unsigned i = 0; i < k; ++i) v_power = v_power * v;
  const Eigen::MatrixXcd exact = matrix.evolution(t * static_cast<double>(k));
  return (exact - v_power).jacobiSvd().singularValues()(0);
}

unsigned trotter_steps_for(unsigned k, double t, double b, double eps_A) {
  if (eps_A <= 0) throw Error("eps_A must be positive");
  const double kt3b3 = static_cast<double>(k) * std::pow(std::abs(t), 3) *
                       std::pow(std::abs(b), 3);
  const double m = std::sqrt(kt3b3 / (2.0 * eps_A));
  return std::max<unsigned>(1, static_cast<unsigned>(std::ceil(m - 1e-12)));
}

QuantumCircuit PoissonTensorPlan::per_dim_circuit(unsigned m) const {
  return strang_circuit(decompose(per_dim), per_dim_time(), m);
}

Eigen::MatrixXcd PoissonTensorPlan::exact_unitary() const {
  Eigen::MatrixXcd result = per_dim.evolution(per_dim_time());
  const Eigen::MatrixXcd one_dim = result;
  for (unsigned d = 1; d < d_dims; ++d)
    result = Eigen::kroneckerProduct(result, one_dim).eval();
  return result;
}

PoissonTensorPlan poisson_tensor_plan(double t, unsigned d_dims, unsigned n_b) {
  if (d_dims < 1) throw Error("dimension count must be >= 1");
  PoissonTensorPlan plan;
  plan.d_dims = d_dims;
  plan.n_b = n_b;
  plan.t = t;
  plan.per_dim = TridiagonalToeplitz{n_b, 2.0, -1.0};
  plan.mesh_h = 1.0 / (static_cast<double>(plan.per_dim.dim()) + 1.0);
  return plan;
}

}  // namespace hhl
