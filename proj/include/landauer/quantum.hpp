// Copyright 2026 The Landauer Collision Model Authors
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

#pragma once

// Labeled multi-qubit registers.
//
// Basis convention: each qubit uses the ordered basis {|0>, |1>} with |1> the
// excited level (energy +omega/2). In a register the leftmost label is the
// most significant qubit, so for labels (S, R) the basis is
// |00>, |01>, |10>, |11> with S written first.

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "landauer/linalg.hpp"

namespace landauer {

/// Subsystem tag. The system is reservoir 0; ancillas carry the reservoir
/// index (1-based) and the collision index at which they entered.
struct Label {
  int reservoir = 0;
  int collision = 0;

  static constexpr Label system() { return Label{0, 0}; }
  static constexpr Label ancilla(int reservoir, int collision) { return Label{reservoir, collision}; }

  constexpr bool is_system() const { return reservoir == 0; }

  /// "S" or "R<reservoir>_<collision>".
  std::string str() const;

  friend constexpr auto operator<=>(const Label&, const Label&) = default;
};

/// H = (omega / 2) * sigma_z with sigma_z = |1><1| - |0><0|.
struct QubitHamiltonian {
  double omega = 1.0;

  ComplexMatrix matrix() const;
};

inline constexpr double kStateTolerance = 1e-10;

/// Hermitian, unit-trace, positive semidefinite operator on a labeled
/// register of qubits. Construction validates the invariants and keeps the
/// spectrum (ascending) for later entropy evaluations.
class DensityMatrix {
 public:
  /// Throws ContractError on label/dimension problems and StateError when
  /// Hermiticity, trace or positivity fails at kStateTolerance.
  DensityMatrix(std::vector<Label> labels, ComplexMatrix matrix);

  const std::vector<Label>& labels() const { return labels_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t num_qubits() const { return labels_.size(); }
  std::size_t dim() const { return matrix_.dim(); }

  /// Ascending eigenvalues of matrix().
  std::span<const double> spectrum() const { return spectrum_; }

  bool has(const Label& label) const;
  /// Position of `label` in labels(); throws ContractError when absent.
  std::size_t index_of(const Label& label) const;

 private:
  std::vector<Label> labels_;
  ComplexMatrix matrix_;
  std::vector<double> spectrum_;
};

/// Two-qubit partial swap (cos t) I + i (sin t) SWAP, written with the
/// e^{it} diagonal corners:
///
///   [ e^{it}    0        0       0    ]
///   [   0     cos t   i sin t    0    ]
///   [   0    i sin t   cos t     0    ]
///   [   0       0        0    e^{it}  ]
class PartialSwapGate {
 public:
  double strength() const { return strength_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  friend PartialSwapGate partial_swap(double strength);
  PartialSwapGate(double strength, ComplexMatrix matrix)
      : strength_(strength), matrix_(std::move(matrix)) {}

  double strength_;
  ComplexMatrix matrix_;
};

/// Throws ContractError unless 0 <= strength <= pi/2.
PartialSwapGate partial_swap(double strength);

/// Gibbs state exp(-beta H) / Z on a single qubit tagged `label`.
/// Populations are p0 = 1 / (1 + e^{-beta omega}), p1 = 1 / (1 + e^{beta omega}).
DensityMatrix thermal_qubit(double beta, const QubitHamiltonian& h,
                            Label label = Label::system());

/// diag(p0, 1 - p0) on a single qubit; p0 must lie in [0, 1].
DensityMatrix diagonal_qubit(double p0, Label label = Label::system());

/// U rho U^dagger with the gate acting on qubits (a, b) in that order.
DensityMatrix apply_gate(const DensityMatrix& state, const PartialSwapGate& gate, const Label& a,
                         const Label& b);

/// Same for an arbitrary 4x4 two-qubit unitary.
DensityMatrix apply_two_qubit_unitary(const DensityMatrix& state, const ComplexMatrix& unitary,
                                      const Label& a, const Label& b);

/// Traces out `discard`; remaining labels keep their order. `discard` must be
/// a non-empty proper subset of the labels.
DensityMatrix partial_trace(const DensityMatrix& state, std::span<const Label> discard);

/// Reduced state on `keep` (in the order of state.labels()).
DensityMatrix reduce_to(const DensityMatrix& state, std::span<const Label> keep);

/// Single-qubit marginal.
DensityMatrix marginal(const DensityMatrix& state, const Label& label);

/// state (x) fresh; fresh labels are appended after the existing ones.
DensityMatrix attach(const DensityMatrix& state, const DensityMatrix& fresh);

}  // namespace landauer
