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

#include "landauer/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "landauer/errors.hpp"

namespace landauer {

std::string Label::str() const {
  if (is_system()) return "S";
  return "R" + std::to_string(reservoir) + "_" + std::to_string(collision);
}

ComplexMatrix QubitHamiltonian::matrix() const {
  return ComplexMatrix::diagonal({-0.5 * omega, 0.5 * omega});
}

DensityMatrix::DensityMatrix(std::vector<Label> labels, ComplexMatrix matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
  if (labels_.empty()) throw ContractError("density matrix needs at least one label");
  std::set<Label> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size()) throw ContractError("duplicate subsystem label");
  if (labels_.size() >= 8 || (std::size_t{1} << labels_.size()) != matrix_.dim()) {
    throw ContractError("matrix dimension " + std::to_string(matrix_.dim()) + " does not match " +
                        std::to_string(labels_.size()) + " qubit labels");
  }
  if (hermiticity_defect(matrix_) > kStateTolerance) {
    throw StateError("density matrix is not Hermitian");
  }
  const Complex tr = trace(matrix_);
  if (std::abs(tr.real() - 1.0) > kStateTolerance || std::abs(tr.imag()) > kStateTolerance) {
    throw StateError("density matrix trace " + std::to_string(tr.real()) + " is not 1");
  }
  spectrum_ = hermitian_eigenvalues(matrix_);
  if (spectrum_.front() < -kStateTolerance) {
    throw StateError("density matrix has negative eigenvalue " + std::to_string(spectrum_.front()));
  }
}

bool DensityMatrix::has(const Label& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t DensityMatrix::index_of(const Label& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ContractError("unknown subsystem label " + label.str());
  return static_cast<std::size_t>(it - labels_.begin());
}

PartialSwapGate partial_swap(double strength) {
  if (!(strength >= 0.0 && strength <= std::numbers::pi / 2)) {
    throw ContractError("partial swap strength " + std::to_string(strength) +
                        " outside [0, pi/2]");
  }
  const double c = std::cos(strength);
  const double s = std::sin(strength);
  const Complex corner = std::polar(1.0, strength);
  const Complex is{0.0, s};
  ComplexMatrix u{{corner, 0, 0, 0}, {0, c, is, 0}, {0, is, c, 0}, {0, 0, 0, corner}};
  return PartialSwapGate(strength, std::move(u));
}

DensityMatrix thermal_qubit(double beta, const QubitHamiltonian& h, Label label) {
  if (!std::isfinite(beta)) throw ContractError("inverse temperature must be finite");
  if (!(beta > 0.0)) throw ContractError("inverse temperature must be positive");
  const double x = beta * h.omega;
  const double p0 = 1.0 / (1.0 + std::exp(-x));
  const double p1 = 1.0 / (1.0 + std::exp(x));
  return DensityMatrix({label}, ComplexMatrix::diagonal({p0, p1}));
}

DensityMatrix diagonal_qubit(double p0, Label label) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw ContractError("population outside [0, 1]");
  return DensityMatrix({label}, ComplexMatrix::diagonal({p0, 1.0 - p0}));
}

DensityMatrix apply_two_qubit_unitary(const DensityMatrix& state, const ComplexMatrix& unitary,
                                      const Label& a, const Label& b) {
  if (unitary.dim() != 4) throw ContractError("two-qubit unitary must be 4x4");
  if (a == b) throw ContractError("gate needs two distinct qubits");
  const std::size_t n = state.num_qubits();
  const std::size_t bit_a = n - 1 - state.index_of(a);
  const std::size_t bit_b = n - 1 - state.index_of(b);
  const std::size_t dim = state.dim();
  const std::size_t mask = (std::size_t{1} << bit_a) | (std::size_t{1} << bit_b);

  auto local = [&](std::size_t base, std::size_t s) {
    return base | ((s >> 1) << bit_a) | ((s & 1) << bit_b);
  };

  ComplexMatrix m = state.matrix();
  Complex tmp[4];
  // rows: m <- U m
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (std::size_t col = 0; col < dim; ++col) {
      for (std::size_t o = 0; o < 4; ++o) {
        tmp[o] = 0.0;
        for (std::size_t s = 0; s < 4; ++s) tmp[o] += unitary(o, s) * m(local(base, s), col);
      }
      for (std::size_t o = 0; o < 4; ++o) m(local(base, o), col) = tmp[o];
    }
  }
  // columns: m <- m U^dagger
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (std::size_t row = 0; row < dim; ++row) {
      for (std::size_t o = 0; o < 4; ++o) {
        tmp[o] = 0.0;
        for (std::size_t s = 0; s < 4; ++s)
          tmp[o] += m(row, local(base, s)) * std::conj(unitary(o, s));
      }
      for (std::size_t o = 0; o < 4; ++o) m(row, local(base, o)) = tmp[o];
    }
  }
  return DensityMatrix(state.labels(), std::move(m));
}

DensityMatrix apply_gate(const DensityMatrix& state, const PartialSwapGate& gate, const Label& a,
                         const Label& b) {
  return apply_two_qubit_unitary(state, gate.matrix(), a, b);
}

DensityMatrix reduce_to(const DensityMatrix& state, std::span<const Label> keep) {
  const std::size_t n = state.num_qubits();
  std::vector<bool> kept(n, false);
  for (const auto& label : keep) {
    const std::size_t k = state.index_of(label);
    if (kept[k]) throw ContractError("label listed twice: " + label.str());
    kept[k] = true;
  }
  std::vector<Label> labels;
  std::vector<std::size_t> keep_bits;
  std::vector<std::size_t> drop_bits;
  for (std::size_t k = 0; k < n; ++k) {
    if (kept[k]) {
      labels.push_back(state.labels()[k]);
      keep_bits.push_back(n - 1 - k);
    } else {
      drop_bits.push_back(n - 1 - k);
    }
  }
  if (labels.empty()) throw ContractError("cannot trace out every subsystem");
  if (drop_bits.empty()) return state;

  // keep_bits / drop_bits are listed most significant first.
  auto scatter = [](std::size_t value, const std::vector<std::size_t>& bits) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      const std::size_t bit = (value >> (bits.size() - 1 - i)) & 1;
      out |= bit << bits[i];
    }
    return out;
  };

  const std::size_t reduced_dim = std::size_t{1} << keep_bits.size();
  const std::size_t env_dim = std::size_t{1} << drop_bits.size();
  std::vector<std::size_t> row_part(reduced_dim);
  std::vector<std::size_t> env_part(env_dim);
  for (std::size_t i = 0; i < reduced_dim; ++i) row_part[i] = scatter(i, keep_bits);
  for (std::size_t e = 0; e < env_dim; ++e) env_part[e] = scatter(e, drop_bits);

  const auto& full = state.matrix();
  ComplexMatrix reduced(reduced_dim);
  for (std::size_t i = 0; i < reduced_dim; ++i)
    for (std::size_t j = 0; j < reduced_dim; ++j) {
      Complex sum{};
      for (std::size_t e = 0; e < env_dim; ++e)
        sum += full(row_part[i] | env_part[e], row_part[j] | env_part[e]);
      reduced(i, j) = sum;
    }
  return DensityMatrix(std::move(labels), std::move(reduced));
}

DensityMatrix partial_trace(const DensityMatrix& state, std::span<const Label> discard) {
  if (discard.empty()) throw ContractError("partial_trace: nothing to discard");
  for (const auto& label : discard) state.index_of(label);
  std::vector<Label> keep;
  for (const auto& label : state.labels())
    if (std::find(discard.begin(), discard.end(), label) == discard.end()) keep.push_back(label);
  if (keep.empty()) throw ContractError("partial_trace: cannot discard every subsystem");
  return reduce_to(state, keep);
}

DensityMatrix marginal(const DensityMatrix& state, const Label& label) {
  const Label keep[] = {label};
  return reduce_to(state, keep);
}

DensityMatrix attach(const DensityMatrix& state, const DensityMatrix& fresh) {
  std::vector<Label> labels = state.labels();
  for (const auto& label : fresh.labels()) {
    if (state.has(label)) throw ContractError("label collision on attach: " + label.str());
    labels.push_back(label);
  }
  return DensityMatrix(std::move(labels), kron(state.matrix(), fresh.matrix()));
}

}  // namespace landauer
