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

#ifndef HHL_STATEVECTOR_HPP
#define HHL_STATEVECTOR_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "hhl/types.hpp"

namespace hhl {

//============================================================================
// Operations
//============================================================================

// Qubit 0 is the least significant bit of a basis-state index. This
// convention is fixed across the whole library.

enum class GateKind { kX, kH, kRy, kRx, kU1, kGlobalPhase };

struct Control {
  unsigned qubit = 0;
  bool positive = true;  // negative controls fire on |0>
};

// A (multi-)controlled single-qubit gate. The target is ignored for
// kGlobalPhase, which multiplies every control-matching amplitude by
// exp(i*angle).
struct Gate {
  GateKind kind = GateKind::kX;
  unsigned target = 0;
  double angle = 0.0;  // rotation/phase parameter, radians
  std::vector<Control> controls;
};

// Index permutation of two qubits. Used for the QFT bit reversal; applied as
// a remap, never decomposed.
struct SwapOp {
  unsigned a = 0;
  unsigned b = 0;
  std::vector<Control> controls;
};

// Dense unitary on an explicit list of target qubits. Reserved for oracle
// modes (exact evolution, spectral-exact inversion); the Trotter path never
// emits one. Bit i of the block index corresponds to targets[i].
struct DenseOp {
  std::vector<unsigned> targets;
  Eigen::MatrixXcd matrix;
  std::vector<Control> controls;
  std::string label;
};

using Operation = std::variant<Gate, SwapOp, DenseOp>;

// 2x2 matrix of a gate kind, row-major {m00, m01, m10, m11}.
std::array<cdouble, 4> gate_matrix(GateKind kind, double angle);

//============================================================================
// QuantumCircuit
//============================================================================

class QuantumCircuit {
 public:
  explicit QuantumCircuit(unsigned n_qubits);

  unsigned n_qubits() const { return n_qubits_; }
  const std::vector<Operation>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }

  void add(Operation op);  // validates qubit indices and control overlap

  // Convenience builders.
  void x(unsigned target, std::vector<Control> controls = {});
  void h(unsigned target, std::vector<Control> controls = {});
  void ry(double angle, unsigned target, std::vector<Control> controls = {});
  void rx(double angle, unsigned target, std::vector<Control> controls = {});
  void u1(double angle, unsigned target, std::vector<Control> controls = {});
  void global_phase(double angle, std::vector<Control> controls = {});
  void swap(unsigned a, unsigned b, std::vector<Control> controls = {});
  void dense(std::vector<unsigned> targets, Eigen::MatrixXcd matrix,
             std::vector<Control> controls = {}, std::string label = {});

  // Appends another circuit of the same width.
  void append(const QuantumCircuit& other);

  // Formal inverse: reversed op order, each op inverted.
  QuantumCircuit inverse() const;

  // Remaps qubit indices into a wider register and optionally promotes every
  // op by extra controls. qubit_map[i] is the new index of qubit i.
  QuantumCircuit embedded(unsigned new_width,
                          const std::vector<unsigned>& qubit_map,
                          const std::vector<Control>& extra_controls = {}) const;

 private:
  unsigned n_qubits_;
  std::vector<Operation> ops_;
};

// Per-kind and per-control-arity counts plus a CNOT-equivalent total. The
// CNOT-equivalent of a k-controlled rotation uses the (16k-12) decomposition
// bound; CX counts 1, CCX counts 6, swaps and dense blocks count 0.
struct GateCounts {
  std::map<std::string, std::size_t> by_kind;
  std::map<unsigned, std::size_t> by_control_arity;
  std::size_t cnot_equivalents = 0;
  std::size_t total_ops = 0;
};

GateCounts count_gates(const QuantumCircuit& circuit);

std::size_t cnot_equivalents(GateKind kind, std::size_t n_controls);

//============================================================================
// StateVector
//============================================================================

class StateVector {
 public:
  // |0...0> on n_qubits.
  explicit StateVector(unsigned n_qubits);

  // Takes ownership of explicit amplitudes; length must be a power of two
  // and the norm must be 1 within 1e-8 (then normalized exactly).
  static StateVector from_amplitudes(std::vector<cdouble> amps);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cdouble>& amps() const { return amps_; }
  std::vector<cdouble>& amps() { return amps_; }
  cdouble amp(std::size_t index) const { return amps_[index]; }

  double norm() const;

  void apply_in_place(const Gate& gate);
  void apply_in_place(const SwapOp& op);
  void apply_in_place(const DenseOp& op);
  void apply_in_place(const QuantumCircuit& circuit);

 private:
  unsigned n_qubits_;
  std::vector<cdouble> amps_;
};

// U * state for the circuit unitary U; dimensions must match.
StateVector apply(const QuantumCircuit& circuit, StateVector state);

struct PostSelection {
  double probability = 0.0;
  StateVector collapsed;
};

// Probability of `outcome` on `qubit` and the renormalized collapsed state.
// Throws ImpossibleOutcome on zero probability.
PostSelection post_select(const StateVector& state, unsigned qubit, bool outcome);

// Marginal distribution over the listed qubits; entry m corresponds to the
// outcome whose bit j is the measured value of qubits[j].
std::vector<double> marginal_probabilities(const StateVector& state,
                                           const std::vector<unsigned>& qubits);

// Multinomial draw from the exact marginal distribution, deterministic for a
// fixed seed. Keys are bitstrings with qubits[0] leftmost.
std::map<std::string, std::size_t> sample_counts(const StateVector& state,
                                                 const std::vector<unsigned>& qubits,
                                                 std::size_t shots,
                                                 std::uint64_t seed);

// Dense unitary of a circuit; column k is the image of basis state k.
// Capped at 12 qubits.
Eigen::MatrixXcd circuit_unitary(const QuantumCircuit& circuit);

}  // namespace hhl

#endif  // HHL_STATEVECTOR_HPP
