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

#ifndef HHL_QPE_HPP
#define HHL_QPE_HPP

#include <map>
#include <optional>

#include "hhl/richardson.hpp"
#include "hhl/statevector.hpp"
#include "hhl/toeplitz.hpp"

namespace hhl {

// |v> -> (1/sqrt(2^n)) sum_w exp(2 pi i v w / 2^n) |w> on an n-qubit
// register with qubit 0 as the least significant bit. The bit reversal is
// realized with swap ops.
QuantumCircuit qft_circuit(unsigned n);
QuantumCircuit inverse_qft_circuit(unsigned n);

struct QpeLayout {
  unsigned n_b = 1;
  unsigned n_l = 1;
  unsigned width = 0;
  unsigned system0 = 0;    // system qubits [system0, system0 + n_b)
  unsigned counting0 = 0;  // counting qubits [counting0, counting0 + n_l)
  std::optional<unsigned> flag;  // Trotter flag ancilla, prepared in |1>

  std::vector<unsigned> system_qubits() const;
  std::vector<unsigned> counting_qubits() const;
};

struct QpeConfig {
  enum class Source { kExactOracle, kStrang };
  unsigned n_l = 1;
  double t = 1.0;  // must satisfy t <= 2 pi / lambda_max
  Source source = Source::kExactOracle;
  // Per-power Trotter exponents, one per counting qubit (kStrang only).
  std::vector<unsigned> m_of_power;
  H3Style h3_style = H3Style::kFlagIncrement;
};

// Phase estimation of U = e^{iAt}: Hadamards on the counting register,
// controlled U^{2^s} per counting qubit s, inverse QFT. A register value v
// estimates v = round(2^{n_l} lambda t / 2 pi).
QuantumCircuit build_qpe(const QpeConfig& config, const TridiagonalToeplitz& matrix,
                         const QpeLayout& layout);

// Default evolution time 2 pi (2^{n_l}-1) / (2^{n_l} lambda_max), which maps
// lambda_max onto the top register value.
double default_evolution_time(unsigned n_l, double lambda_max);

// Marginal distribution of the counting register, register value -> mass.
std::map<std::size_t, double> eigenvalue_histogram(const StateVector& state,
                                                   const QpeLayout& layout);

}  // namespace hhl

#endif  // HHL_QPE_HPP
