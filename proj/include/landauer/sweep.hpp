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

// Batch front end: configuration documents, parameter sweeps, per-step CSV
// files, the summary.json document and its text report.
//
// Configuration schema (flat `key = value`, `#` starts a comment):
//
//   mode          single | multi                  (default single)
//   T_system      system temperature               (required unless swept)
//   T_reservoirs  comma-separated temperatures     (required; one per reservoir)
//   J             system-ancilla strength          (required unless swept)
//   Omega         ancilla-ancilla strength         (required unless swept)
//   n_collisions  positive integer                 (default 60)
//   omega         qubit frequency                  (default 1)
//   sweep         Omega | J | T_system             (optional)
//   values        comma-separated sweep values     (required with sweep)
//   output_dir    directory for run files          (default "output")
//
// Without `sweep`, the document describes one run swept over Omega = {Omega}.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "landauer/collision.hpp"
#include "landauer/errors.hpp"

namespace landauer {

enum class SweepParameter { kOmega, kJ, kSystemTemperature };

/// "Omega", "J" or "T_system".
std::string_view parameter_name(SweepParameter parameter);

struct SweepSpec {
  RunConfig base;
  SweepParameter parameter = SweepParameter::kOmega;
  std::vector<double> values;
  std::string output_dir = "output";

  /// base with the swept parameter set to `value`.
  RunConfig config_for(double value) const;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

/// Configuration problem; line() is 0 when the problem is not tied to a line.
class ConfigError : public Error {
 public:
  ConfigError(int line, std::string field, const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

/// Unreadable or malformed summary document.
class SummaryError : public Error {
 public:
  using Error::Error;
};

SweepSpec parse_config(std::string_view text);
std::string serialize_config(const SweepSpec& spec);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

/// "run_<param>=<value>.csv"
std::string run_file_name(SweepParameter parameter, double value);

std::string csv_header(std::size_t reservoirs);
/// Header plus one row per record; numbers carry 17 significant digits.
std::string to_csv(const Trajectory& trajectory);

/// Collision indices n >= 2 where the total dissipated heat changes sign.
std::vector<int> heat_sign_changes(const Trajectory& trajectory);
/// First n with negative total dissipated heat, or 0.
int first_negative_heat(const Trajectory& trajectory);

struct RunOutcome {
  double value = 0.0;
  Trajectory trajectory;
};

/// summary.json contents for a finished sweep.
std::string render_summary(const SweepSpec& spec, const std::vector<RunOutcome>& runs);

/// Human-readable table for a summary.json document. Throws SummaryError.
std::string report(std::string_view summary_json);

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitLedgerIdentity = 2,
  kExitIo = 3,
};

/// Any |lhs - rhs| above this aborts a sweep.
inline constexpr double kLedgerAbortThreshold = 1e-6;

/// Diagnostic for the first record whose |lhs - rhs| exceeds `threshold`
/// (NaN counts as exceeding), or nullopt.
std::optional<std::string> ledger_identity_failure(SweepParameter parameter,
                                                   const std::vector<RunOutcome>& runs,
                                                   double threshold = kLedgerAbortThreshold);

/// Runs every sweep value and writes the CSVs plus summary.json into
/// `output_dir`. Diagnostics go to `diagnostics`. Sweep values run on up to
/// `jobs` threads; output is identical for any job count.
int execute(const SweepSpec& spec, const std::filesystem::path& output_dir,
            std::ostream& diagnostics, unsigned jobs = 1);

}  // namespace landauer
