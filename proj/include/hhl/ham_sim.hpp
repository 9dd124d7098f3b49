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

#ifndef HHL_HAM_SIM_HPP
#define HHL_HAM_SIM_HPP

#include <Eigen/Dense>

#include "hhl/statevector.hpp"
#include "hhl/toeplitz.hpp"

namespace hhl {

// Splitting A = H1 + H2 + H3 with H1 = a*I (commutes with the rest),
// H2 = b * I ⊗ sigma_x coupling pairs (2j, 2j+1), and H3 the staggered
// remainder coupling (i, i+1) for odd i.
struct ToeplitzDecomposition {
  double a = 0.0;
  double b = 0.0;
  unsigned n_b = 1;

  std::size_t dim() const { return std::size_t{1} << n_b; }
  Eigen::MatrixXd h2_matrix() const;
  Eigen::MatrixXd h3_matrix() const;  // zero for n_b == 1
  // max(|H2|, |H3|) in the 2-norm; equals |b| whenever H2 is nonzero.
  double d_norm() const { return std::abs(b); }
};

ToeplitzDecomposition decompose(const TridiagonalToeplitz& matrix);

// Two interchangeable H3 realizations; they agree as unitaries.
enum class H3Style {
  kFlagIncrement,  // flag ancilla + increment / Rx / decrement, O(n_b) CNOTs
  kCBlocks,        // per-coupling-class CNOT fans, O(n_b^2) CNOTs, no ancilla
};

// All circuits below act on n_b + 1 qubits: system on [0, n_b), flag
// ancilla at index n_b. The flag must be supplied in |1> and is returned
// in |1>; only the kFlagIncrement H3 touches it.

QuantumCircuit exp_h1(const ToeplitzDecomposition& decomp, double t);
QuantumCircuit exp_h2(const ToeplitzDecomposition& decomp, double t);
QuantumCircuit exp_h3(const ToeplitzDecomposition& decomp, double t,
                      H3Style style = H3Style::kFlagIncrement);

// exp(i H1 t) followed by the symmetric splitting S1^m(t/m) in the
// rearranged form exp(-iH2 t/2m) (exp(iH2 t/m) exp(iH3 t/m))^m exp(iH2 t/2m),
// which uses the H2 circuit m+2 times.
QuantumCircuit strang_circuit(const ToeplitzDecomposition& decomp, double t, unsigned m,
                              H3Style style = H3Style::kFlagIncrement);

// System-block unitary of a (n_b+1)-qubit circuit, i.e. the flag = |1>
// block. Requires the flag to be restored by the circuit.
Eigen::MatrixXcd system_block(const QuantumCircuit& circuit, unsigned n_b);

// Measured |(e^{iAt})^k - V^k(t,m)|_2 against the dense oracle.
double trotter_error(const TridiagonalToeplitz& matrix, double t, unsigned m, unsigned k,
                     H3Style style = H3Style::kFlagIncrement);

// ceil(sqrt(k t^3 |b|^3 / (2 eps_A))), floored at 1.
unsigned trotter_steps_for(unsigned k, double t, double b, double eps_A);

// d-dimensional Poisson evolution as a tensor product of d identical
// one-dimensional blocks (a=2, b=-1) with per-dimension time t/h^2.
struct PoissonTensorPlan {
  unsigned d_dims = 1;
  unsigned n_b = 1;
  double t = 0.0;
  double mesh_h = 0.0;              // 1/(N+1)
  TridiagonalToeplitz per_dim;      // a=2, b=-1
  double per_dim_time() const { return t / (mesh_h * mesh_h); }

  // Trotter circuit for one dimension (width n_b + 1).
  QuantumCircuit per_dim_circuit(unsigned m) const;
  // Exact evolution of the full d-dimensional block, dim (2^{n_b})^d.
  Eigen::MatrixXcd exact_unitary() const;
};

PoissonTensorPlan poisson_tensor_plan(double t, unsigned d_dims, unsigned n_b);

}  // namespace hhl

#endif  // HHL_HAM_SIM_HPP
