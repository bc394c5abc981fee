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

// Entropic and calorimetric bookkeeping for one collision step.
//
// Units: entropies in nats, energies and heats in units of omega,
// inverse temperatures in 1/omega (k_B = hbar = 1).
//
// Sign conventions:
//   heat        dQ~ = Tr[(rho'_R - rho_R) H_R]   (heat dissipated into the ancilla)
//   entropy     dS  = S(rho'_S) - S(rho_S),  dS~ = -dS
//   production  D   = D(rho'_joint || rho'_S (x) prod_m rho_R^(m))
//
// Note the mixed reference state in D: post-collision system marginal,
// pre-collision reservoir marginals.

#include <span>
#include <vector>

#include "landauer/quantum.hpp"

namespace landauer {

inline constexpr double kRankTolerance = 1e-12;
inline constexpr double kViolationMargin = 1e-12;
inline constexpr double kOffDiagonalTolerance = 1e-9;

/// -Tr(rho ln rho); eigenvalues at or below 1e-12 contribute 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Tr rho ln rho - Tr rho ln sigma. Throws SupportError when the smallest
/// eigenvalue of sigma is below kRankTolerance.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(rho_system) + sum_m S(rho_m) - S(rho). `system` and `reservoirs` must
/// cover the labels of rho exactly once.
double mutual_information(const DensityMatrix& rho, const Label& system,
                          std::span<const Label> reservoirs);

/// Tr[(post - pre) H]: energy gained by the ancilla.
double heat_to_reservoir(const DensityMatrix& pre, const DensityMatrix& post,
                         const QubitHamiltonian& h);

/// beta = ln(p0 / p1) / omega for a diagonal single-qubit state.
///
/// Throws ThermalFormError when |rho_01| > offdiag_tol or when a population
/// sits at 0 or 1 (infinite beta).
double inverse_temperature(const DensityMatrix& rho, const QubitHamiltonian& h,
                           double offdiag_tol = kOffDiagonalTolerance);

struct HeatSplit {
  double dia = 0.0;  // population-driven part
  double coh = 0.0;  // coherence-driven part
  double total() const { return dia + coh; }
};

/// Heat a partial swap of strength `strength` will dissipate into the second
/// qubit of a two-qubit pre-collision state, split by origin. With basis
/// |00>, |01>, |10>, |11> numbered 1..4:
///   dia = omega sin^2(J) (rho_33 - rho_22),  coh = omega Im(rho_23) sin(2J).
HeatSplit heat_decomposition(const DensityMatrix& pre_pair, double strength, double omega);

/// Per-reservoir contribution to a ledger entry.
struct ReservoirTerm {
  Label label;
  double beta = 0.0;       // from the pre-collision ancilla marginal
  double heat = 0.0;       // dQ~ for this ancilla
  double log_term = 0.0;   // Tr[(rho'_R - rho_R) ln rho_R]
  HeatSplit split;         // zero unless supplied by the caller
};

/// Entropy balance of one step without any thermal-form assumption:
///   dS = D + sum_m log_term_m - I.
struct EntropyBalance {
  double delta_S = 0.0;
  double entropy_production = 0.0;
  double mutual_info_pre = 0.0;
  std::vector<double> log_terms;  // one per reservoir label
  double residual() const;        // dS - (D + sum log_terms - I)
};

EntropyBalance entropy_balance(const DensityMatrix& pre_joint, const DensityMatrix& post_joint,
                               const Label& system, std::span<const Label> reservoirs);

struct LandauerLedger {
  int n = 0;
  double delta_S = 0.0;
  double entropy_production = 0.0;
  double mutual_info_pre = 0.0;
  std::vector<ReservoirTerm> reservoirs;
  double heat_dia = 0.0;
  double heat_coh = 0.0;
  double lhs = 0.0;  // sum_m beta_m dQ~_m
  double rhs = 0.0;  // dS~ + D - I
  bool violated = false;  // I > D + kViolationMargin

  double delta_S_tilde() const { return -delta_S; }
  double heat_total() const;
  double residual() const { return lhs - rhs; }
  /// Direct form of the bound: lhs < dS~ - kViolationMargin.
  bool direct_violation() const { return lhs < delta_S_tilde() - kViolationMargin; }
};

/// Builds the ledger for one step. `hamiltonians` holds one reservoir
/// Hamiltonian per entry of `reservoirs` (or a single one shared by all).
/// `splits`, when non-empty, carries one HeatSplit per reservoir and fills
/// heat_dia / heat_coh.
///
/// Throws ThermalFormError when an ancilla marginal has no inverse
/// temperature and SupportError when a reference marginal is rank-deficient.
LandauerLedger evaluate_ledger(const DensityMatrix& pre_joint, const DensityMatrix& post_joint,
                               const Label& system, std::span<const Label> reservoirs,
                               std::span<const QubitHamiltonian> hamiltonians,
                               std::span<const HeatSplit> splits = {});

}  // namespace landauer
