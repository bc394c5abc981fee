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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "landauer/errors.hpp"
#include "landauer/quantum.hpp"
#include "landauer/thermo.hpp"
#include "support/generators.hpp"
#include "support/reference_model.hpp"

using namespace landauer;
using landauer::testing::max_abs_diff;
using landauer::testing::random_state;
using landauer::testing::Rng;

namespace {

const Label kS = Label::system();
const Label kR1 = Label::ancilla(1, 1);
const Label kR2 = Label::ancilla(1, 2);
const Label kR3 = Label::ancilla(2, 1);

// 30-term Taylor series of exp(i * a * M).
ComplexMatrix series_exp_i(const ComplexMatrix& m, double a) {
  const std::size_t n = m.dim();
  ComplexMatrix term = ComplexMatrix::identity(n);
  ComplexMatrix sum = term;
  for (int k = 1; k < 30; ++k) {
    term = scale(term * m, Complex(0.0, a / k));
    sum = sum + term;
  }
  return sum;
}

ComplexMatrix swap_matrix() {
  ComplexMatrix s(4);
  s(0, 0) = s(3, 3) = 1.0;
  s(1, 2) = s(2, 1) = 1.0;
  return s;
}

// sigma_x sigma_x + sigma_y sigma_y + sigma_z sigma_z.
ComplexMatrix heisenberg() {
  const ComplexMatrix x{{0, 1}, {1, 0}};
  const ComplexMatrix y{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
  const ComplexMatrix z{{1, 0}, {0, -1}};
  return kron(x, x) + kron(y, y) + kron(z, z);
}

DensityMatrix pure(std::vector<Label> labels, std::vector<Complex> amplitudes) {
  const std::size_t d = amplitudes.size();
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return DensityMatrix(std::move(labels), m);
}

}  // namespace

TEST_CASE("labels", "[quantum]") {
  CHECK(kS.str() == "S");
  CHECK(Label::ancilla(2, 17).str() == "R2_17");
  CHECK(kS.is_system());
  CHECK_FALSE(kR1.is_system());
  CHECK(kR1 < kR2);
  CHECK(kR2 < kR3);
}

TEST_CASE("qubit Hamiltonian has the excited level second", "[quantum]") {
  CHECK(QubitHamiltonian{2.0}.matrix() == ComplexMatrix::diagonal({-1.0, 1.0}));
}

TEST_CASE("thermal_qubit", "[quantum]") {
  SECTION("beta = 1") {
    const auto rho = thermal_qubit(1.0, QubitHamiltonian{1.0});
    CHECK(rho.matrix()(0, 0).real() == Catch::Approx(0.731058578630005).margin(1e-15));
    CHECK(rho.matrix()(1, 1).real() == Catch::Approx(0.26894142136999516).margin(1e-15));
    CHECK(rho.matrix()(0, 1) == Complex(0.0, 0.0));
  }
  SECTION("beta = 1/3") {
    const auto rho = thermal_qubit(1.0 / 3.0, QubitHamiltonian{1.0});
    CHECK(rho.matrix()(0, 0).real() == Catch::Approx(0.5825702064623147).margin(1e-15));
    CHECK(rho.matrix()(1, 1).real() == Catch::Approx(0.4174297935376854).margin(1e-15));
  }
  SECTION("very cold stays finite") {
    const auto rho = thermal_qubit(1e4, QubitHamiltonian{1.0});
    CHECK(rho.matrix()(0, 0).real() == 1.0);
    CHECK(rho.matrix()(1, 1).real() >= 0.0);
  }
  SECTION("label is carried") {
    CHECK(thermal_qubit(1.0, QubitHamiltonian{}, kR3).labels() == std::vector<Label>{kR3});
  }
  SECTION("errors") {
    CHECK_THROWS_AS(thermal_qubit(0.0, QubitHamiltonian{}), ContractError);
    CHECK_THROWS_AS(thermal_qubit(-1.0, QubitHamiltonian{}), ContractError);
    CHECK_THROWS_AS(thermal_qubit(std::nan(""), QubitHamiltonian{}), ContractError);
    CHECK_THROWS_AS(thermal_qubit(INFINITY, QubitHamiltonian{}), ContractError);
  }
}

TEST_CASE("density matrix validation", "[quantum]") {
  CHECK_THROWS_AS(DensityMatrix({}, ComplexMatrix::identity(1)), ContractError);
  CHECK_THROWS_AS(DensityMatrix({kS}, ComplexMatrix::diagonal({0.25, 0.25, 0.25, 0.25})), ContractError);
  CHECK_THROWS_AS(DensityMatrix({kS, kS}, ComplexMatrix::diagonal({0.25, 0.25, 0.25, 0.25})), ContractError);
  CHECK_THROWS_AS(DensityMatrix({kS}, ComplexMatrix::diagonal({0.6, 0.6})), StateError);
  CHECK_THROWS_AS(DensityMatrix({kS}, ComplexMatrix::diagonal({1.2, -0.2})), StateError);
  CHECK_THROWS_AS(DensityMatrix({kS}, ComplexMatrix{{0.5, 0.1}, {0.0, 0.5}}), StateError);
  // Off-diagonal too large for positivity.
  CHECK_THROWS_AS(DensityMatrix({kS}, ComplexMatrix{{0.5, 0.6}, {0.6, 0.5}}), StateError);
  // Round-off below tolerance is accepted.
  CHECK_NOTHROW(DensityMatrix({kS}, ComplexMatrix::diagonal({1.0 + 1e-12, -1e-12})));

  const DensityMatrix rho({kS, kR1}, ComplexMatrix::diagonal({0.1, 0.2, 0.3, 0.4}));
  CHECK(rho.index_of(kR1) == 1);
  CHECK(rho.has(kS));
  CHECK_FALSE(rho.has(kR2));
  CHECK_THROWS_AS(rho.index_of(kR2), ContractError);
  CHECK(rho.spectrum()[0] == Catch::Approx(0.1));
}

TEST_CASE("diagonal_qubit", "[quantum]") {
  const auto rho = diagonal_qubit(0.2, kR1);
  CHECK(rho.matrix() == ComplexMatrix::diagonal({0.2, 0.8}));
  CHECK_THROWS_AS(diagonal_qubit(1.5), ContractError);
}

TEST_CASE("partial_swap examples", "[quantum][gate]") {
  SECTION("zero strength is the identity") {
    CHECK(max_abs_diff(partial_swap(0.0).matrix(), ComplexMatrix::identity(4)) < 1e-15);
  }
  SECTION("full strength moves |01> to i|10>") {
    const auto u = partial_swap(std::numbers::pi / 2).matrix();
    CHECK(std::abs(u(2, 1) - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(u(1, 1)) < 1e-15);
    CHECK(std::abs(u(0, 0) - Complex(0.0, 1.0)) < 1e-15);
  }
  SECTION("block layout") {
    const double t = 0.4;
    const auto u = partial_swap(t).matrix();
    CHECK(std::abs(u(0, 0) - std::polar(1.0, t)) < 1e-15);
    CHECK(std::abs(u(3, 3) - std::polar(1.0, t)) < 1e-15);
    CHECK(std::abs(u(1, 1) - std::cos(t)) < 1e-15);
    CHECK(std::abs(u(1, 2) - Complex(0.0, std::sin(t))) < 1e-15);
    CHECK(std::abs(u(2, 1) - Complex(0.0, std::sin(t))) < 1e-15);
    CHECK(partial_swap(t).strength() == t);
  }
  SECTION("range") {
    CHECK_THROWS_AS(partial_swap(-0.01), ContractError);
    CHECK_THROWS_AS(partial_swap(1.6), ContractError);
    CHECK_THROWS_AS(partial_swap(std::nan("")), ContractError);
    CHECK_NOTHROW(partial_swap(std::numbers::pi / 2));
  }
}

TEST_CASE("partial_swap is the exponential of the swap generator", "[quantum][gate][oracle]") {
  for (double t : {0.05, 0.1, 0.7, std::numbers::pi / 2}) {
    const auto u = partial_swap(t).matrix();
    CHECK(max_abs_diff(u, series_exp_i(swap_matrix(), t)) < 1e-12);
    // Heisenberg generator: exp(i t SWAP) = e^{i t/2} exp(+i g tau H) with 2 g tau = t.
    const auto via_heisenberg = scale(series_exp_i(heisenberg(), t / 2.0), std::polar(1.0, t / 2.0));
    CHECK(max_abs_diff(u, via_heisenberg) < 1e-12);
  }
}

TEST_CASE("partial_swap is unitary", "[quantum][gate][property]") {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const double t = rng.uniform(0.0, std::numbers::pi / 2);
    const auto u = partial_swap(t).matrix();
    CHECK(frobenius_norm(u * dagger(u) - ComplexMatrix::identity(4)) <= 1e-12 * 4);
  }
}

TEST_CASE("apply_gate", "[quantum][gate]") {
  Rng rng(2);
  SECTION("zero strength leaves the state alone") {
    const auto rho = random_state(rng, {kS, kR1, kR2});
    CHECK(max_abs_diff(apply_gate(rho, partial_swap(0.0), kS, kR2).matrix(), rho.matrix()) < 1e-15);
  }
  SECTION("full swap exchanges marginals") {
    const auto rho = attach(thermal_qubit(1.0 / 3.0, QubitHamiltonian{}), thermal_qubit(1.0, QubitHamiltonian{}, kR1));
    const auto out = apply_gate(rho, partial_swap(std::numbers::pi / 2), kS, kR1);
    CHECK(max_abs_diff(marginal(out, kS).matrix(), marginal(rho, kR1).matrix()) < 1e-15);
    CHECK(max_abs_diff(marginal(out, kR1).matrix(), marginal(rho, kS).matrix()) < 1e-15);
  }
  SECTION("spectrum is preserved") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto rho = random_state(rng, {kS, kR1, kR3});
      const auto out = apply_gate(rho, partial_swap(rng.uniform(0.0, 1.5)), kR3, kS);
      for (std::size_t k = 0; k < rho.dim(); ++k) CHECK(out.spectrum()[k] == Catch::Approx(rho.spectrum()[k]).margin(1e-12));
    }
  }
  SECTION("label errors") {
    const auto rho = random_state(rng, {kS, kR1});
    CHECK_THROWS_AS(apply_gate(rho, partial_swap(0.1), kS, kS), ContractError);
    CHECK_THROWS_AS(apply_gate(rho, partial_swap(0.1), kS, kR2), ContractError);
    CHECK_THROWS_AS(apply_two_qubit_unitary(rho, ComplexMatrix::identity(2), kS, kR1), ContractError);
  }
  SECTION("matches a full-register operator") {
    for (int trial = 0; trial < 20; ++trial) {
      const std::vector<Label> labels{kS, kR1, kR2, kR3};
      const auto rho = random_state(rng, labels);
      const int a = rng.integer(0, 3);
      int b = rng.integer(0, 2);
      if (b >= a) ++b;
      const double t = rng.uniform(0.0, 1.5);
      const auto out = apply_gate(rho, partial_swap(t), labels[a], labels[b]);
      const reference::Mat full = reference::embed(reference::partial_swap(t), 4, a, b);
      const reference::Mat expected = full * reference::to_eigen(rho.matrix()) * full.adjoint();
      CHECK((reference::to_eigen(out.matrix()) - expected).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
  SECTION("acting on kept qubits commutes with tracing the rest") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto rho = random_state(rng, {kS, kR1, kR2});
      const auto gate = partial_swap(rng.uniform(0.0, 1.5));
      const std::vector<Label> drop{kR2};
      const auto lhs = partial_trace(apply_gate(rho, gate, kS, kR1), drop);
      const auto rhs = apply_gate(partial_trace(rho, drop), gate, kS, kR1);
      CHECK(max_abs_diff(lhs.matrix(), rhs.matrix()) < 1e-13);
    }
  }
}

TEST_CASE("partial_trace", "[quantum]") {
  Rng rng(3);
  SECTION("product state returns its factor") {
    const auto a = thermal_qubit(0.5, QubitHamiltonian{});
    const auto b = diagonal_qubit(0.9, kR1);
    const auto joint = attach(a, b);
    const std::vector<Label> drop_r{kR1};
    const std::vector<Label> drop_s{kS};
    CHECK(max_abs_diff(partial_trace(joint, drop_r).matrix(), a.matrix()) < 1e-15);
    CHECK(max_abs_diff(partial_trace(joint, drop_s).matrix(), b.matrix()) < 1e-15);
  }
  SECTION("Bell state marginal is maximally mixed") {
    const double r = std::sqrt(0.5);
    const auto bell = pure({kS, kR1}, {r, 0.0, 0.0, r});
    CHECK(max_abs_diff(marginal(bell, kS).matrix(), ComplexMatrix::diagonal({0.5, 0.5})) < 1e-15);
  }
  SECTION("sequential traces equal a joint trace and the index-loop oracle") {
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = random_state(rng, {kS, kR1, kR2, kR3});
      const std::vector<Label> one{kR1};
      const std::vector<Label> two{kR3};
      const std::vector<Label> both{kR1, kR3};
      const auto sequential = partial_trace(partial_trace(rho, one), two);
      const auto joint = partial_trace(rho, both);
      CHECK(max_abs_diff(sequential.matrix(), joint.matrix()) < 1e-15);
      CHECK(joint.labels() == std::vector<Label>{kS, kR2});
      const auto oracle = reference::partial_trace(reference::to_eigen(rho.matrix()), 4, {0, 2});
      CHECK((reference::to_eigen(joint.matrix()) - oracle).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
  SECTION("reduce_to keeps the state's order") {
    const auto rho = random_state(rng, {kS, kR1, kR2});
    const std::vector<Label> keep{kR2, kS};
    const auto out = reduce_to(rho, keep);
    CHECK(out.labels() == std::vector<Label>{kS, kR2});
    const std::vector<Label> drop{kR1};
    CHECK(out.matrix() == partial_trace(rho, drop).matrix());
  }
  SECTION("errors") {
    const auto rho = random_state(rng, {kS, kR1});
    const std::vector<Label> none;
    const std::vector<Label> all{kS, kR1};
    const std::vector<Label> unknown{kR2};
    CHECK_THROWS_AS(partial_trace(rho, none), ContractError);
    CHECK_THROWS_AS(partial_trace(rho, all), ContractError);
    CHECK_THROWS_AS(partial_trace(rho, unknown), ContractError);
    CHECK_THROWS_AS(reduce_to(rho, none), ContractError);
  }
}

TEST_CASE("attach", "[quantum]") {
  Rng rng(4);
  const auto a = random_state(rng, {kS, kR1});
  const auto b = random_state(rng, {kR2});
  const auto joint = attach(a, b);
  CHECK(joint.labels() == std::vector<Label>{kS, kR1, kR2});
  const std::vector<Label> drop_new{kR2};
  const std::vector<Label> drop_old{kS, kR1};
  CHECK(max_abs_diff(partial_trace(joint, drop_new).matrix(), a.matrix()) < 1e-15);
  CHECK(max_abs_diff(partial_trace(joint, drop_old).matrix(), b.matrix()) < 1e-15);

  const auto pair = attach(marginal(a, kS), b);
  const std::vector<Label> reservoirs{kR2};
  CHECK(std::abs(mutual_information(pair, kS, reservoirs)) < 1e-12);

  CHECK_THROWS_AS(attach(a, random_state(rng, {kR1})), ContractError);
  CHECK_THROWS_AS(attach(random_state(rng, {kS, kR1, kR2, Label::ancilla(1, 3), Label::ancilla(1, 4)}),
                         random_state(rng, {kR3, Label::ancilla(2, 2)})),
                  CapacityError);
}
