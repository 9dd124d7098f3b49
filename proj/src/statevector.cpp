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

#include "hhl/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hhl {

namespace {

constexpr unsigned kUnitaryQubitCap = 12;  // 128 MB of complex doubles

struct ControlMasks {
  std::uint64_t mask = 0;   // all control qubits
  std::uint64_t value = 0;  // required bit values (positive controls)
};

ControlMasks control_masks(const std::vector<Control>& controls) {
  ControlMasks cm;
  for (const Control& c : controls) {
    cm.mask |= std::uint64_t{1} << c.qubit;
    if (c.positive) cm.value |= std::uint64_t{1} << c.qubit;
  }
  return cm;
}

void check_controls(const std::vector<Control>& controls, unsigned n_qubits,
                    std::uint64_t used_targets) {
  std::uint64_t seen = used_targets;
  for (const Control& c : controls) {
    if (c.qubit >= n_qubits) throw Error("control qubit out of range");
    const std::uint64_t bit = std::uint64_t{1} << c.qubit;
    if (seen & bit) throw Error("control overlaps target or another control");
    seen |= bit;
  }
}

std::string kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return "x";
    case GateKind::kH: return "h";
    case GateKind::kRy: return "ry";
    case GateKind::kRx: return "rx";
    case GateKind::kU1: return "u1";
    case GateKind::kGlobalPhase: return "gphase";
  }
  return "?";
}

}  // namespace

std::array<cdouble, 4> gate_matrix(GateKind kind, double angle) {
  const cdouble i1(0.0, 1.0);
  switch (kind) {
    case GateKind::kX:
      return {cdouble(0), cdouble(1), cdouble(1), cdouble(0)};
    case GateKind::kH: {
      const double s = 1.0 / std::sqrt(2.0);
      return {cdouble(s), cdouble(s), cdouble(s), cdouble(-s)};
    }
    case GateKind::kRy: {
      const double ch = std::cos(angle / 2), sh = std::sin(angle / 2);
      return {cdouble(ch), cdouble(-sh), cdouble(sh), cdouble(ch)};
    }
    case GateKind::kRx: {
      const double ch = std::cos(angle / 2), sh = std::sin(angle / 2);
      return {cdouble(ch), -i1 * sh, -i1 * sh, cdouble(ch)};
    }
    case GateKind::kU1:
      return {cdouble(1), cdouble(0), cdouble(0), std::exp(i1 * angle)};
    case GateKind::kGlobalPhase: {
      const cdouble p = std::exp(i1 * angle);
      return {p, cdouble(0), cdouble(0), p};
    }
  }
  throw Error("unknown gate kind");
}

//============================================================================
// QuantumCircuit
//============================================================================

QuantumCircuit::QuantumCircuit(unsigned n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw Error("circuit needs at least one qubit");
  if (n_qubits > 30) throw Error("circuit width not supported");
}

void QuantumCircuit::add(Operation op) {
  if (const Gate* g = std::get_if<Gate>(&op)) {
    if (g->kind != GateKind::kGlobalPhase) {
      if (g->target >= n_qubits_) throw Error("gate target out of range");
      check_controls(g->controls, n_qubits_, std::uint64_t{1} << g->target);
    } else {
      check_controls(g->controls, n_qubits_, 0);
    }
  } else if (const SwapOp* s = std::get_if<SwapOp>(&op)) {
    if (s->a >= n_qubits_ || s->b >= n_qubits_ || s->a == s->b)
      throw Error("bad swap qubits");
    check_controls(s->controls,
                   n_qubits_,
                   (std::uint64_t{1} << s->a) | (std::uint64_t{1} << s->b));
  } else {
    const DenseOp& d = std::get<DenseOp>(op);
    if (d.targets.empty()) throw Error("dense op needs targets");
    std::uint64_t tmask = 0;
    for (unsigned q : d.targets) {
      if (q >= n_qubits_) throw Error("dense target out of range");
      const std::uint64_t bit = std::uint64_t{1} << q;
      if (tmask & bit) throw Error("duplicate dense target");
      tmask |= bit;
    }
    const Eigen::Index want = Eigen::Index{1} << d.targets.size();
    if (d.matrix.rows() != want || d.matrix.cols() != want)
      throw Error("dense matrix dimension mismatch");
    check_controls(d.controls, n_qubits_, tmask);
  }
  ops_.push_back(std::move(op));
}

void QuantumCircuit::x(unsigned target, std::vector<Control> controls) {
  add(Gate{GateKind::kX, target, 0.0, std::move(controls)});
}
void QuantumCircuit::h(unsigned target, std::vector<Control> controls) {
  add(Gate{GateKind::kH, target, 0.0, std::move(controls)});
}
void QuantumCircuit::ry(double angle, unsigned target, std::vector<Control> controls) {
  add(Gate{GateKind::kRy, target, angle, std::move(controls)});
}
void QuantumCircuit::rx(double angle, unsigned target, std::vector<Control> controls) {
  add(Gate{GateKind::kRx, target, angle, std::move(controls)});
}
void QuantumCircuit::u1(double angle, unsigned target, std::vector<Control> controls) {
  add(Gate{GateKind::kU1, target, angle, std::move(controls)});
}
void QuantumCircuit::global_phase(double angle, std::vector<Control> controls) {
  add(Gate{GateKind::kGlobalPhase, 0, angle, std::move(controls)});
}
void QuantumCircuit::swap(unsigned a, unsigned b, std::vector<Control> controls) {
  add(SwapOp{a, b, std::move(controls)});
}
void QuantumCircuit::dense(std::vector<unsigned> targets, Eigen::MatrixXcd matrix,
                           std::vector<Control> controls, std::string label) {
  add(DenseOp{std::move(targets), std::move(matrix), std::move(controls),
              std::move(label)});
}

void QuantumCircuit::append(const QuantumCircuit& other) {
  if (other.n_qubits_ != n_qubits_) throw Error("append width mismatch");
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
}

QuantumCircuit QuantumCircuit::inverse() const {
  QuantumCircuit inv(n_qubits_);
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    if (const Gate* g = std::get_if<Gate>(&*it)) {
      Gate r = *g;
      switch (g->kind) {
        case GateKind::kX:
        case GateKind::kH:
          break;  // involutions
        case GateKind::kRy:
        case GateKind::kRx:
        case GateKind::kU1:
        case GateKind::kGlobalPhase:
          r.angle = -g->angle;
          break;
      }
      inv.ops_.push_back(r);
    } else if (const SwapOp* s = std::get_if<SwapOp>(&*it)) {
      inv.ops_.push_back(*s);
    } else {
      DenseOp d = std::get<DenseOp>(*it);
      d.matrix = d.matrix.adjoint().eval();
      inv.ops_.push_back(std::move(d));
    }
  }
  return inv;
}

QuantumCircuit QuantumCircuit::embedded(unsigned new_width,
                                        const std::vector<unsigned>& qubit_map,
                                        const std::vector<Control>& extra_controls) const {
  if (qubit_map.size() != n_qubits_) throw Error("qubit map size mismatch");
  for (unsigned q : qubit_map)
    if (q >= new_width) throw Error("qubit map target out of range");

  auto map_controls = [&](const std::vector<Control>& controls) {
    std::vector<Control> out;
    out.reserve(controls.size() + extra_controls.size());
    for (const Control& c : controls) out.push_back({qubit_map[c.qubit], c.positive});
    out.insert(out.end(), extra_controls.begin(), extra_controls.end());
    return out;
  };

  QuantumCircuit result(new_width);
  for (const Operation& op : ops_) {
    if (const Gate* g = std::get_if<Gate>(&op)) {
      Gate r = *g;
      if (g->kind != GateKind::kGlobalPhase) r.target = qubit_map[g->target];
      r.controls = map_controls(g->controls);
      result.add(r);
    } else if (const SwapOp* s = std::get_if<SwapOp>(&op)) {
      result.add(SwapOp{qubit_map[s->a], qubit_map[s->b], map_controls(s->controls)});
    } else {
      DenseOp d = std::get<DenseOp>(op);
      for (unsigned& q : d.targets) q = qubit_map[q];
      d.controls = map_controls(d.controls);
      result.add(std::move(d));
    }
  }
  return result;
}

std::size_t cnot_equivalents(GateKind kind, std::size_t n_controls) {
  if (n_controls == 0) return 0;
  if (kind == GateKind::kX) {
    if (n_controls == 1) return 1;
    if (n_controls == 2) return 6;
  }
  return 16 * n_controls - 12;
}

GateCounts count_gates(const QuantumCircuit& circuit) {
  GateCounts counts;
  for (const Operation& op : circuit.ops()) {
    counts.total_ops++;
    if (const Gate* g = std::get_if<Gate>(&op)) {
      counts.by_kind[kind_name(g->kind)]++;
      counts.by_control_arity[static_cast<unsigned>(g->controls.size())]++;
      counts.cnot_equivalents += cnot_equivalents(g->kind, g->controls.size());
    } else if (std::holds_alternative<SwapOp>(op)) {
      counts.by_kind["swap"]++;
    } else {
      counts.by_kind["dense"]++;
    }
  }
  return counts;
}

//============================================================================
// StateVector
//============================================================================

StateVector::StateVector(unsigned n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits, cdouble(0)) {
  if (n_qubits == 0 || n_qubits > 30) throw Error("unsupported qubit count");
  amps_[0] = cdouble(1);
}

StateVector StateVector::from_amplitudes(std::vector<cdouble> amps) {
  const std::size_t n = amps.size();
  if (n < 2 || (n & (n - 1)) != 0) throw Error("amplitude count not a power of two");
  double norm2 = 0;
  for (const cdouble& a : amps) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-8) throw Error("amplitudes not normalized");
  const double scale = 1.0 / std::sqrt(norm2);
  for (cdouble& a : amps) a *= scale;

  unsigned n_qubits = 0;
  while ((std::size_t{1} << n_qubits) < n) n_qubits++;
  StateVector sv(n_qubits);
  sv.amps_ = std::move(amps);
  return sv;
}

double StateVector::norm() const {
  double norm2 = 0;
  for (const cdouble& a : amps_) norm2 += std::norm(a);
  return std::sqrt(norm2);
}

void StateVector::apply_in_place(const Gate& gate) {
  const ControlMasks cm = control_masks(gate.controls);
  const std::size_t dim = amps_.size();

  if (gate.kind == GateKind::kGlobalPhase) {
    const cdouble phase = std::exp(cdouble(0, 1) * gate.angle);
    for (std::size_t i = 0; i < dim; ++i)
      if ((i & cm.mask) == cm.value) amps_[i] *= phase;
    return;
  }

  const std::uint64_t tbit = std::uint64_t{1} << gate.target;
  if (gate.kind == GateKind::kU1) {
    const cdouble phase = std::exp(cdouble(0, 1) * gate.angle);
    for (std::size_t i = 0; i < dim; ++i)
      if ((i & tbit) && (i & cm.mask) == cm.value) amps_[i] *= phase;
    return;
  }

  const auto m = gate_matrix(gate.kind, gate.angle);
  for (std::size_t i0 = 0; i0 < dim; ++i0) {
    if (i0 & tbit) continue;
    if ((i0 & cm.mask) != cm.value) continue;
    const std::size_t i1 = i0 | tbit;
    const cdouble a0 = amps_[i0];
    const cdouble a1 = amps_[i1];
    amps_[i0] = m[0] * a0 + m[1] * a1;
    amps_[i1] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply_in_place(const SwapOp& op) {
  const ControlMasks cm = control_masks(op.controls);
  const std::uint64_t abit = std::uint64_t{1} << op.a;
  const std::uint64_t bbit = std::uint64_t{1} << op.b;
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(i & abit) || (i & bbit)) continue;  // visit a=1, b=0 once
    if ((i & cm.mask) != cm.value) continue;
    std::swap(amps_[i], amps_[i ^ abit ^ bbit]);
  }
}

void StateVector::apply_in_place(const DenseOp& op) {
  const ControlMasks cm = control_masks(op.controls);
  const unsigned k = static_cast<unsigned>(op.targets.size());
  const std::size_t block = std::size_t{1} << k;
  std::uint64_t tmask = 0;
  for (unsigned q : op.targets) tmask |= std::uint64_t{1} << q;

  std::vector<cdouble> gathered(block);
  const std::size_t dim = amps_.size();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & tmask) continue;
    if ((base & cm.mask) != cm.value) continue;
    for (std::size_t j = 0; j < block; ++j) {
      std::size_t idx = base;
      for (unsigned bit = 0; bit < k; ++bit)
        if (j & (std::size_t{1} << bit)) idx |= std::uint64_t{1} << op.targets[bit];
      gathered[j] = amps_[idx];
    }
    for (std::size_t row = 0; row < block; ++row) {
      cdouble acc(0);
      for (std::size_t col = 0; col < block; ++col)
        acc += op.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) * gathered[col];
      std::size_t idx = base;
      for (unsigned bit = 0; bit < k; ++bit)
        if (row & (std::size_t{1} << bit)) idx |= std::uint64_t{1} << op.targets[bit];
      amps_[idx] = acc;
    }
  }
}

void StateVector::apply_in_place(const QuantumCircuit& circuit) {
  if (circuit.n_qubits() != n_qubits_) throw Error("circuit/state width mismatch");
  for (const Operation& op : circuit.ops())
    std::visit([this](const auto& o) { apply_in_place(o); }, op);
}

StateVector apply(const QuantumCircuit& circuit, StateVector state) {
  state.apply_in_place(circuit);
  return state;
}

PostSelection post_select(const StateVector& state, unsigned qubit, bool outcome) {
  if (qubit >= state.n_qubits()) throw Error("post_select qubit out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const std::size_t dim = state.dim();

  double probability = 0;
  for (std::size_t i = 0; i < dim; ++i)
    if (((i & bit) != 0) == outcome) probability += std::norm(state.amp(i));
  if (probability <= 1e-300) throw ImpossibleOutcome();

  std::vector<cdouble> collapsed(dim, cdouble(0));
  const double scale = 1.0 / std::sqrt(probability);
  for (std::size_t i = 0; i < dim; ++i)
    if (((i & bit) != 0) == outcome) collapsed[i] = state.amp(i) * scale;
  return PostSelection{probability, StateVector::from_amplitudes(std::move(collapsed))};
}

std::vector<double> marginal_probabilities(const StateVector& state,
                                           const std::vector<unsigned>& qubits) {
  for (unsigned q : qubits)
    if (q >= state.n_qubits()) throw Error("marginal qubit out of range");
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  const std::size_t dim = state.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t outcome = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j)
      if (i & (std::uint64_t{1} << qubits[j])) outcome |= std::size_t{1} << j;
    probs[outcome] += std::norm(state.amp(i));
  }
  return probs;
}

std::map<std::string, std::size_t> sample_counts(const StateVector& state,
                                                 const std::vector<unsigned>& qubits,
                                                 std::size_t shots,
                                                 std::uint64_t seed) {
  if (shots == 0) throw Error("shots must be >= 1");
  const std::vector<double> probs = marginal_probabilities(state, qubits);
  std::vector<double> cumulative(probs.size());
  double acc = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cumulative[i] = acc;
  }
  cumulative.back() = std::max(cumulative.back(), 1.0);

  std::mt19937_64 rng(seed);
  std::map<std::string, std::size_t> histogram;
  std::vector<std::size_t> tallies(probs.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) {
    // 53-bit uniform in [0,1); avoids distribution-implementation variance
    const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    tallies[static_cast<std::size_t>(it - cumulative.begin())]++;
  }
  for (std::size_t outcome = 0; outcome < tallies.size(); ++outcome) {
    if (tallies[outcome] == 0) continue;
    std::string key(qubits.size(), '0');
    for (std::size_t j = 0; j < qubits.size(); ++j)
      if (outcome & (std::size_t{1} << j)) key[j] = '1';
    histogram[key] = tallies[outcome];
  }
  return histogram;
}

Eigen::MatrixXcd circuit_unitary(const QuantumCircuit& circuit) {
  if (circuit.n_qubits() > kUnitaryQubitCap)
    throw Error("dense unitary extraction capped at 12 qubits");
  const std::size_t dim = std::size_t{1} << circuit.n_qubits();
  Eigen::MatrixXcd unitary(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<cdouble> basis(dim, cdouble(0));
    basis[col] = cdouble(1);
    StateVector sv = StateVector::from_amplitudes(std::move(basis));
    sv.apply_in_place(circuit);
    for (std::size_t row = 0; row < dim; ++row)
      unitary(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = sv.amp(row);
  }
  return unitary;
}

}  // namespace hhl
