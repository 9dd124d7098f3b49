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

#include "hhl/qpe.hpp"

#include <cmath>

namespace hhl {

std::vector<unsigned> QpeLayout::system_qubits() const {
  std::vector<unsigned> qubits(n_b);
  for (unsigned i = 0; i < n_b; ++i) qubits[i] = system0 + i;
  return qubits;
}

std::vector<unsigned> QpeLayout::counting_qubits() const {
  std::vector<unsigned> qubits(n_l);
  for (unsigned i = 0; i < n_l; ++i) qubits[i] = counting0 + i;
  return qubits;
}

QuantumCircuit qft_circuit(unsigned n) {
  if (n < 1) throw Error("QFT needs at least one qubit");
  QuantumCircuit circuit(n);
  for (unsigned j = n; j-- > 0;) {
    circuit.h(j);
    for (unsigned m = j; m-- > 0;) {
      const double angle = kPi / static_cast<double>(std::uint64_t{1} << (j - m));
      circuit.u1(angle, j, {{m, true}});
    }
  }
  for (unsigned k = 0; k < n / 2; ++k) circuit.swap(k, n - 1 - k);
  return circuit;
}

QuantumCircuit inverse_qft_circuit(unsigned n) { return qft_circuit(n).inverse(); }

double default_evolution_time(unsigned n_l, double lambda_max) {
  const double n = static_cast<double>(std::uint64_t{1} << n_l);
  return 2.0 * kPi * (n - 1.0) / (n * lambda_max);
}

QuantumCircuit build_qpe(const QpeConfig& config, const TridiagonalToeplitz& matrix,
                         const QpeLayout& layout) {
  if (layout.n_l != config.n_l) throw Error("layout/config n_l mismatch");
  if (layout.n_b != matrix.n_b) throw Error("layout/matrix n_b mismatch");
  if (config.source == QpeConfig::Source::kStrang &&
      config.m_of_power.size() != config.n_l)
    throw Error("one Trotter exponent per counting qubit required");

  QuantumCircuit circuit(layout.width);
  for (unsigned s = 0; s < config.n_l; ++s) circuit.h(layout.counting0 + s);

  const ToeplitzDecomposition decomp = decompose(matrix);
  for (unsigned s = 0; s < config.n_l; ++s) {
    const std::uint64_t power = std::uint64_t{1} << s;
    const Control control{layout.counting0 + s, true};
    if (config.source == QpeConfig::Source::kExactOracle) {
      circuit.dense(layout.system_qubits(),
                    matrix.evolution(config.t * static_cast<double>(power)), {control},
                    "evolution");
    } else {
      if (!layout.flag) throw Error("Trotter evolution needs a flag ancilla");
      // V^k(t, m) = exp(i H1 t k) S1^{k m}(t/m) realized as one Strang
      // circuit with k*m steps over total time t*k.
      const unsigned m = config.m_of_power[s];
      const QuantumCircuit step =
          strang_circuit(decomp, config.t * static_cast<double>(power),
                         static_cast<unsigned>(power) * m, config.h3_style);
      std::vector<unsigned> qubit_map(decomp.n_b + 1);
      for (unsigned q = 0; q < decomp.n_b; ++q) qubit_map[q] = layout.system0 + q;
      qubit_map[decomp.n_b] = *layout.flag;
      circuit.append(step.embedded(layout.width, qubit_map, {control}));
    }
  }

  std::vector<unsigned> counting_map(config.n_l);
  for (unsigned i = 0; i < config.n_l; ++i) counting_map[i] = layout.counting0 + i;
  circuit.append(inverse_qft_circuit(config.n_l).embedded(layout.width, counting_map));
  return circuit;
}

std::map<std::size_t, double> eigenvalue_histogram(const StateVector& state,
                                                   const QpeLayout& layout) {
  const std::vector<double> probs =
      marginal_probabilities(state, layout.counting_qubits());
  std::map<std::size_t, double> histogram;
  for (std::size_t v = 0; v < probs.size(); ++v)
    if (probs[v] > 0) histogram[v] = probs[v];
  return histogram;
}

}  // namespace hhl
