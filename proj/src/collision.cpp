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

#include "landauer/collision.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "landauer/errors.hpp"

namespace landauer {

namespace {

bool strength_in_range(double x) { return x >= 0.0 && x <= std::numbers::pi / 2; }

void notify(const StageObserver& observer, int n, Stage stage, const DensityMatrix& state) {
  if (observer) observer(n, stage, state);
}

DensityMatrix fresh(const InitialConditions& initial, int reservoir, int collision) {
  DensityMatrix raw = initial.fresh_ancilla(reservoir, collision);
  if (raw.dim() != 2) throw ContractError("fresh ancilla must be a single qubit");
  return DensityMatrix({Label::ancilla(reservoir, collision)}, raw.matrix());
}

DensityMatrix initial_system(const InitialConditions& initial) {
  if (initial.system.dim() != 2) throw ContractError("system must be a single qubit");
  return DensityMatrix({Label::system()}, initial.system.matrix());
}

void finish(Trajectory& trajectory) {
  trajectory.violation_intervals = find_violation_intervals(trajectory);
}

}  // namespace

void RunConfig::validate() const {
  if (!(std::isfinite(system_temperature) && system_temperature > 0.0)) {
    throw ContractError("system temperature must be positive and finite");
  }
  if (reservoir_temperatures.empty()) throw ContractError("at least one reservoir is required");
  for (double t : reservoir_temperatures) {
    if (!(std::isfinite(t) && t > 0.0)) {
      throw ContractError("reservoir temperatures must be positive and finite");
    }
  }
  if (mode == Mode::kSingle && reservoir_temperatures.size() != 1) {
    throw ContractError("single mode takes exactly one reservoir temperature");
  }
  if (mode == Mode::kMulti && reservoir_temperatures.size() > kMaxReservoirs) {
    throw CapacityError("at most " + std::to_string(kMaxReservoirs) +
                        " reservoirs fit the dimension cap");
  }
  if (!strength_in_range(system_coupling)) throw ContractError("J outside [0, pi/2]");
  if (!strength_in_range(intracollision)) throw ContractError("Omega outside [0, pi/2]");
  if (n_collisions < 1) throw ContractError("n_collisions must be positive");
  if (!(std::isfinite(omega) && omega > 0.0)) throw ContractError("omega must be positive");
}

double Trajectory::max_abs_residual() const {
  double worst = 0.0;
  for (const auto& record : records) worst = std::max(worst, std::abs(record.residual()));
  return worst;
}

InitialConditions thermal_initial_conditions(const RunConfig& config) {
  const QubitHamiltonian h{config.omega};
  std::vector<double> betas;
  for (double t : config.reservoir_temperatures) betas.push_back(1.0 / t);
  return InitialConditions{
      thermal_qubit(1.0 / config.system_temperature, h),
      [h, betas](int reservoir, int collision) {
        return thermal_qubit(betas.at(static_cast<std::size_t>(reservoir - 1)), h,
                             Label::ancilla(reservoir, collision));
      }};
}

Trajectory run_single(const RunConfig& config, const StageObserver& observer) {
  config.validate();
  return run_single(config, thermal_initial_conditions(config), observer);
}

Trajectory run_single(const RunConfig& config, const InitialConditions& initial,
                      const StageObserver& observer) {
  config.validate();
  if (config.mode != Mode::kSingle) throw ContractError("run_single needs mode = single");

  const QubitHamiltonian h{config.omega};
  const QubitHamiltonian hamiltonians[] = {h};
  const PartialSwapGate collide = partial_swap(config.system_coupling);
  const PartialSwapGate intracollide = partial_swap(config.intracollision);
  const Label system = Label::system();

  Trajectory trajectory{config, {}, {}};
  trajectory.records.reserve(static_cast<std::size_t>(config.n_collisions));

  DensityMatrix window = attach(initial_system(initial), fresh(initial, 1, 1));
  for (int n = 1; n <= config.n_collisions; ++n) {
    const Label ancilla = Label::ancilla(1, n);
    const Label reservoirs[] = {ancilla};
    notify(observer, n, Stage::kPreCollision, window);

    const HeatSplit split = heat_decomposition(window, config.system_coupling, config.omega);
    const DensityMatrix post = apply_gate(window, collide, system, ancilla);
    notify(observer, n, Stage::kPostCollision, post);

    const HeatSplit splits[] = {split};
    LandauerLedger ledger = evaluate_ledger(window, post, system, reservoirs, hamiltonians, splits);
    ledger.n = n;
    trajectory.records.push_back(std::move(ledger));

    if (n == config.n_collisions) break;

    const Label next = Label::ancilla(1, n + 1);
    DensityMatrix extended = attach(post, fresh(initial, 1, n + 1));
    notify(observer, n, Stage::kAttached, extended);
    extended = apply_gate(extended, intracollide, ancilla, next);
    notify(observer, n, Stage::kIntracollided, extended);
    window = partial_trace(extended, reservoirs);
    notify(observer, n, Stage::kWindowShifted, window);
  }
  finish(trajectory);
  return trajectory;
}

Trajectory run_multi(const RunConfig& config, const StageObserver& observer) {
  config.validate();
  return run_multi(config, thermal_initial_conditions(config), observer);
}

Trajectory run_multi(const RunConfig& config, const InitialConditions& initial,
                     const StageObserver& observer) {
  config.validate();
  if (config.mode != Mode::kMulti) throw ContractError("run_multi needs mode = multi");

  const int reservoir_count = static_cast<int>(config.num_reservoirs());
  const QubitHamiltonian hamiltonians[] = {QubitHamiltonian{config.omega}};
  const PartialSwapGate collide = partial_swap(config.system_coupling);
  const PartialSwapGate intracollide = partial_swap(config.intracollision);
  const Label system = Label::system();

  Trajectory trajectory{config, {}, {}};
  trajectory.records.reserve(static_cast<std::size_t>(config.n_collisions));

  DensityMatrix window = initial_system(initial);
  for (int m = 1; m <= reservoir_count; ++m) window = attach(window, fresh(initial, m, 1));

  for (int n = 1; n <= config.n_collisions; ++n) {
    std::vector<Label> reservoirs;
    for (int m = 1; m <= reservoir_count; ++m) reservoirs.push_back(Label::ancilla(m, n));
    notify(observer, n, Stage::kPreCollision, window);

    // Sequential system collisions; each split uses the (S, R^(m)) marginal
    // that its own gate sees.
    std::vector<HeatSplit> splits;
    DensityMatrix post = window;
    for (const auto& ancilla : reservoirs) {
      const Label pair_labels[] = {system, ancilla};
      splits.push_back(
          heat_decomposition(reduce_to(post, pair_labels), config.system_coupling, config.omega));
      post = apply_gate(post, collide, system, ancilla);
    }
    notify(observer, n, Stage::kPostCollision, post);

    LandauerLedger ledger = evaluate_ledger(window, post, system, reservoirs, hamiltonians, splits);
    ledger.n = n;
    trajectory.records.push_back(std::move(ledger));

    if (n == config.n_collisions) break;

    // Hand-over one reservoir at a time. The intracollisions act on disjoint
    // qubit pairs, so this equals attaching all, colliding all, tracing all.
    DensityMatrix extended = post;
    for (int m = 1; m <= reservoir_count; ++m) {
      const Label old_ancilla = Label::ancilla(m, n);
      const Label next = Label::ancilla(m, n + 1);
      extended = attach(extended, fresh(initial, m, n + 1));
      notify(observer, n, Stage::kAttached, extended);
      extended = apply_gate(extended, intracollide, old_ancilla, next);
      notify(observer, n, Stage::kIntracollided, extended);
      const Label discard[] = {old_ancilla};
      extended = partial_trace(extended, discard);
    }
    window = std::move(extended);
    notify(observer, n, Stage::kWindowShifted, window);
  }
  finish(trajectory);
  return trajectory;
}

Trajectory run(const RunConfig& config, const StageObserver& observer) {
  return config.mode == Mode::kSingle ? run_single(config, observer) : run_multi(config, observer);
}

std::vector<Interval> find_violation_intervals(const std::vector<bool>& flags) {
  std::vector<Interval> intervals;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (!flags[i]) continue;
    const int index = static_cast<int>(i) + 1;
    if (!intervals.empty() && intervals.back().last == index - 1) {
      intervals.back().last = index;
    } else {
      intervals.push_back({index, index});
    }
  }
  return intervals;
}

std::vector<Interval> find_violation_intervals(const Trajectory& trajectory) {
  std::vector<bool> flags;
  flags.reserve(trajectory.records.size());
  for (const auto& record : trajectory.records) flags.push_back(record.violated);
  return find_violation_intervals(flags);
}

}  // namespace landauer
