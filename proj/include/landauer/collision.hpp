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

// Collision-model protocol engines.
//
// One step n of the M-reservoir protocol acts on the window
// {S, R_n^(1), ..., R_n^(M)}:
//   1. record the pre-collision window (mutual information, ancilla betas);
//   2. S collides with R_n^(1), ..., R_n^(M) in ascending reservoir order,
//      each through partial_swap(J);
//   3. evaluate the ledger;
//   4. unless n is the last step, every reservoir m takes a fresh thermal
//      ancilla R_{n+1}^(m), applies partial_swap(Omega) on (R_n^(m), R_{n+1}^(m))
//      and traces R_n^(m) out.
// Only the active window is ever stored.

#include <functional>
#include <string_view>
#include <vector>

#include "landauer/quantum.hpp"
#include "landauer/thermo.hpp"

namespace landauer {

enum class Mode { kSingle, kMulti };

/// Gate-order convention used by both engines; echoed into run summaries.
inline constexpr std::string_view kGateOrder =
    "system collides with R_n^(1..M) in ascending reservoir order; then each reservoir m "
    "applies V(R_n^(m), R_{n+1}^(m)) in ascending order; R_n^(m) is traced out after its V";

inline constexpr int kDefaultCollisions = 60;
inline constexpr int kMaxReservoirs = 4;

struct RunConfig {
  Mode mode = Mode::kSingle;
  double system_temperature = 1.0;
  std::vector<double> reservoir_temperatures{1.0};
  double system_coupling = 0.0;       // J, system-ancilla partial swap strength
  double intracollision = 0.0;        // Omega, ancilla-ancilla partial swap strength
  int n_collisions = kDefaultCollisions;
  double omega = 1.0;

  std::size_t num_reservoirs() const { return reservoir_temperatures.size(); }

  /// Throws ContractError describing the first violated invariant.
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Inclusive range of collision indices.
struct Interval {
  int first = 0;
  int last = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Trajectory {
  RunConfig config;
  std::vector<LandauerLedger> records;  // records[k].n == k + 1
  std::vector<Interval> violation_intervals;

  double max_abs_residual() const;
};

/// Points in the cycle where observers are called.
enum class Stage {
  kPreCollision,   // window before the system collisions
  kPostCollision,  // window after the system collisions
  kAttached,       // fresh ancillas appended
  kIntracollided,  // ancilla-ancilla gates applied
  kWindowShifted,  // old ancillas traced out; next step's pre-collision window
};

using StageObserver = std::function<void(int n, Stage stage, const DensityMatrix& state)>;

/// Initial system state and the source of fresh ancillas. `fresh_ancilla`
/// receives the 1-based reservoir and collision indices and must return a
/// single-qubit state; the engine relabels it.
struct InitialConditions {
  DensityMatrix system;
  std::function<DensityMatrix(int reservoir, int collision)> fresh_ancilla;
};

/// Thermal system and thermal ancillas at the configured temperatures.
InitialConditions thermal_initial_conditions(const RunConfig& config);

/// Single-reservoir stream. Requires mode == kSingle.
Trajectory run_single(const RunConfig& config, const StageObserver& observer = {});
Trajectory run_single(const RunConfig& config, const InitialConditions& initial,
                      const StageObserver& observer = {});

/// M-reservoir stream, 1 <= M <= kMaxReservoirs. Requires mode == kMulti.
/// The window peaks at 2^(M+2) during the ancilla hand-over because each
/// reservoir's old ancilla is traced out right after its own intracollision.
Trajectory run_multi(const RunConfig& config, const StageObserver& observer = {});
Trajectory run_multi(const RunConfig& config, const InitialConditions& initial,
                     const StageObserver& observer = {});

/// Dispatches on config.mode.
Trajectory run(const RunConfig& config, const StageObserver& observer = {});

std::vector<Interval> find_violation_intervals(const std::vector<bool>& flags);
std::vector<Interval> find_violation_intervals(const Trajectory& trajectory);

}  // namespace landauer
