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

#include "landauer/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "landauer/errors.hpp"

namespace landauer {

namespace {

// Sum of lambda ln lambda over the spectrum with 0 ln 0 = 0.
double neg_entropy(std::span<const double> spectrum) {
  double sum = 0.0;
  for (double lambda : spectrum) {
    if (lambda < -kStateTolerance) {
      throw StateError("eigenvalue " + std::to_string(lambda) + " below validity tolerance");
    }
    if (lambda > kDefaultZeroClip) sum += lambda * std::log(lambda);
  }
  return sum;
}

ComplexMatrix log_of_full_rank(const DensityMatrix& sigma) {
  if (sigma.spectrum().front() < kRankTolerance) {
    throw SupportError("reference state is rank-deficient (min eigenvalue " +
                       std::to_string(sigma.spectrum().front()) + ")");
  }
  return matrix_function(sigma.matrix(), [](double x) { return std::log(x); });
}

void require_single_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 2) throw ContractError(std::string(what) + ": expected a single-qubit state");
}

void require_partition(const DensityMatrix& rho, const Label& system,
                       std::span<const Label> reservoirs) {
  std::vector<Label> parts(reservoirs.begin(), reservoirs.end());
  parts.push_back(system);
  std::vector<Label> labels = rho.labels();
  std::sort(parts.begin(), parts.end());
  std::sort(labels.begin(), labels.end());
  if (parts != labels) {
    throw ContractError("partition must cover every subsystem label exactly once");
  }
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) { return -neg_entropy(rho.spectrum()); }

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw ContractError("relative_entropy: dimension mismatch");
  const ComplexMatrix log_sigma = log_of_full_rank(sigma);
  return neg_entropy(rho.spectrum()) - trace_of_product(rho.matrix(), log_sigma).real();
}

double mutual_information(const DensityMatrix& rho, const Label& system,
                          std::span<const Label> reservoirs) {
  require_partition(rho, system, reservoirs);
  double sum = von_neumann_entropy(marginal(rho, system));
  for (const auto& label : reservoirs) sum += von_neumann_entropy(marginal(rho, label));
  return sum - von_neumann_entropy(rho);
}

double heat_to_reservoir(const DensityMatrix& pre, const DensityMatrix& post,
                         const QubitHamiltonian& h) {
  require_single_qubit(pre, "heat_to_reservoir");
  require_single_qubit(post, "heat_to_reservoir");
  return trace_of_product(post.matrix() - pre.matrix(), h.matrix()).real();
}

double inverse_temperature(const DensityMatrix& rho, const QubitHamiltonian& h,
                           double offdiag_tol) {
  require_single_qubit(rho, "inverse_temperature");
  if (std::abs(rho.matrix()(0, 1)) > offdiag_tol) {
    throw ThermalFormError("single-qubit state has coherence " +
                           std::to_string(std::abs(rho.matrix()(0, 1))) + "; not of Gibbs form");
  }
  const double p0 = rho.matrix()(0, 0).real();
  const double p1 = rho.matrix()(1, 1).real();
  if (!(p0 > 0.0 && p1 > 0.0)) throw ThermalFormError("population at 0 or 1: infinite beta");
  return std::log(p0 / p1) / h.omega;
}

HeatSplit heat_decomposition(const DensityMatrix& pre_pair, double strength, double omega) {
  if (pre_pair.dim() != 4) throw ContractError("heat_decomposition: expected a two-qubit state");
  const auto& rho = pre_pair.matrix();
  const double s = std::sin(strength);
  HeatSplit split;
  split.dia = omega * s * s * (rho(2, 2).real() - rho(1, 1).real());
  split.coh = omega * rho(1, 2).imag() * std::sin(2.0 * strength);
  return split;
}

double EntropyBalance::residual() const {
  const double logs = std::accumulate(log_terms.begin(), log_terms.end(), 0.0);
  return delta_S - (entropy_production + logs - mutual_info_pre);
}

EntropyBalance entropy_balance(const DensityMatrix& pre_joint, const DensityMatrix& post_joint,
                               const Label& system, std::span<const Label> reservoirs) {
  if (pre_joint.labels() != post_joint.labels()) {
    throw ContractError("pre- and post-collision states must share labels");
  }
  require_partition(pre_joint, system, reservoirs);

  const DensityMatrix system_pre = marginal(pre_joint, system);
  const DensityMatrix system_post = marginal(post_joint, system);

  EntropyBalance balance;
  balance.delta_S = von_neumann_entropy(system_post) - von_neumann_entropy(system_pre);
  balance.mutual_info_pre = mutual_information(pre_joint, system, reservoirs);

  // Reference state rho'_S (x) prod_m rho_R^(m), assembled in joint label order.
  ComplexMatrix reference = ComplexMatrix::identity(1);
  bool first = true;
  for (const auto& label : pre_joint.labels()) {
    ComplexMatrix factor =
        label == system ? system_post.matrix() : marginal(pre_joint, label).matrix();
    reference = first ? factor : kron(reference, factor);
    first = false;
  }
  balance.entropy_production =
      relative_entropy(post_joint, DensityMatrix(pre_joint.labels(), std::move(reference)));

  for (const auto& label : reservoirs) {
    const DensityMatrix before = marginal(pre_joint, label);
    const DensityMatrix after = marginal(post_joint, label);
    const ComplexMatrix log_before = log_of_full_rank(before);
    balance.log_terms.push_back(trace_of_product(after.matrix() - before.matrix(), log_before).real());
  }
  return balance;
}

double LandauerLedger::heat_total() const {
  double sum = 0.0;
  for (const auto& term : reservoirs) sum += term.heat;
  return sum;
}

LandauerLedger evaluate_ledger(const DensityMatrix& pre_joint, const DensityMatrix& post_joint,
                               const Label& system, std::span<const Label> reservoirs,
                               std::span<const QubitHamiltonian> hamiltonians,
                               std::span<const HeatSplit> splits) {
  if (hamiltonians.size() != 1 && hamiltonians.size() != reservoirs.size()) {
    throw ContractError("need one reservoir Hamiltonian, or one per reservoir");
  }
  if (!splits.empty() && splits.size() != reservoirs.size()) {
    throw ContractError("need one heat split per reservoir");
  }
  const EntropyBalance balance = entropy_balance(pre_joint, post_joint, system, reservoirs);

  LandauerLedger ledger;
  ledger.delta_S = balance.delta_S;
  ledger.entropy_production = balance.entropy_production;
  ledger.mutual_info_pre = balance.mutual_info_pre;

  for (std::size_t m = 0; m < reservoirs.size(); ++m) {
    const QubitHamiltonian& h = hamiltonians.size() == 1 ? hamiltonians[0] : hamiltonians[m];
    const DensityMatrix before = marginal(pre_joint, reservoirs[m]);
    const DensityMatrix after = marginal(post_joint, reservoirs[m]);
    ReservoirTerm term;
    term.label = reservoirs[m];
    term.beta = inverse_temperature(before, h);
    term.heat = heat_to_reservoir(before, after, h);
    term.log_term = balance.log_terms[m];
    if (!splits.empty()) {
      term.split = splits[m];
      ledger.heat_dia += splits[m].dia;
      ledger.heat_coh += splits[m].coh;
    }
    ledger.lhs += term.beta * term.heat;
    ledger.reservoirs.push_back(term);
  }
  ledger.rhs = ledger.delta_S_tilde() + ledger.entropy_production - ledger.mutual_info_pre;
  ledger.violated = ledger.mutual_info_pre > ledger.entropy_production + kViolationMargin;
  return ledger;
}

}  // namespace landauer
