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

#ifndef HHL_OBSERVABLES_HPP
#define HHL_OBSERVABLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hhl/statevector.hpp"

namespace hhl {

enum class ObservableKind { kNorm, kQuadraticForm, kAbsoluteAverage };

// kPostSelected reads probabilities conditioned on successful state
// preparation; kFullRun reads the joint probabilities of the uNchecked
// pipeline. Both condition on the eigenvalue register reading 0.
enum class ObservableMode { kPostSelected, kFullRun };

struct ObservableRequest {
  ObservableKind kind = ObservableKind::kNorm;
  ObservableMode mode = ObservableMode::kPostSelected;
  double p = 0.0;  // quadratic form diagonal
  double q = 0.0;  // quadratic form off-diagonal
  std::size_t shots = 0;  // 0 = exact probabilities
  std::uint64_t seed = 0;
};

// Pre-measurement pipeline state (after the inverse phase estimation) plus
// the layout and scale constants needed to undo the encoding.
struct HhlFinalState {
  StateVector psi{1};
  unsigned n_b = 1;
  unsigned n_l = 0;  // 0 when the spectral-exact path skipped the register
  unsigned system0 = 0;
  unsigned counting0 = 0;
  unsigned inversion_ancilla = 0;
  std::optional<unsigned> state_prep_ancilla;
  std::optional<unsigned> flag;

  double c_scale = 0.0;     // lambda_min (the rotation normalization)
  double loader_c = 1.0;    // sine-loader rescaling constant
  double norm_b = 1.0;
  double norm_b_inf = 1.0;
};

struct ObservableReport {
  ObservableKind kind = ObservableKind::kNorm;
  ObservableMode mode = ObservableMode::kPostSelected;
  // kNorm: {P(ancilla=1)}; kAbsoluteAverage: {P(ancilla=1, system=0)};
  // kQuadraticForm: {P_norm, n_1(0), n_1(1), ..., n_{n_b}(0), n_{n_b}(1)}.
  std::vector<double> raw_probabilities;
  double scaled_value = 0.0;
  double scaling_factor = 0.0;
  double p = 0.0, q = 0.0;  // quadratic form parameters
  std::size_t shots_used = 0;
  double standard_error = 0.0;
  // scale data needed to recompute scaled_value from resampled raws
  double pair_scale = 0.0;
  double norm_scale = 0.0;
};

// |x| via the probability of the inversion ancilla reading 1 with the
// eigenvalue register at 0.
ObservableReport measure_norm(const HhlFinalState& state, ObservableMode mode);

// x^T B x for the tridiagonal symmetric Toeplitz B = (p, q), assembled from
// the norm probability and n_b pair observables (CNOT fan + Hadamard).
ObservableReport measure_quadratic_form(const HhlFinalState& state, double p, double q,
                                        ObservableMode mode);

// |sum_i x_i| / N via Hadamards on the solution register.
ObservableReport measure_absolute_average(const HhlFinalState& state, ObservableMode mode);

// Resamples the raw probabilities binomially and propagates the statistical
// error through the scaling law (delta method).
ObservableReport shot_estimate(const ObservableReport& exact, std::size_t shots,
                               std::uint64_t seed);

std::string observable_kind_name(ObservableKind kind);
std::string observable_mode_name(ObservableMode mode);

}  // namespace hhl

#endif  // HHL_OBSERVABLES_HPP
