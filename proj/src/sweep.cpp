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

#include "landauer/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace landauer {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kWindowPolicy =
    "window holds S and the current ancillas; fresh ancillas attach just before the "
    "intracollision, old ancillas are traced out right after it; no hand-over after the last step";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view token) {
  token = trim(token);
  if (token.empty()) return std::nullopt;
  if (token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string sci3(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", value);
  return buf;
}

std::string g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

struct Entry {
  int line = 0;
  std::string value;
};

class Document {
 public:
  explicit Document(std::string_view text) {
    static const std::vector<std::string> known = {
        "mode", "T_system", "T_reservoirs", "J",       "Omega",
        "n_collisions", "omega", "sweep", "values", "output_dir"};
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = std::min(text.find('\n', pos), text.size());
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError(line_no, "", "expected `key = value`");
      }
      const std::string key(trim(line.substr(0, eq)));
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw ConfigError(line_no, key, "unknown key");
      }
      if (entries_.count(key)) throw ConfigError(line_no, key, "duplicate key");
      entries_[key] = Entry{line_no, std::string(trim(line.substr(eq + 1)))};
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  int line(const std::string& key) const { return has(key) ? entries_.at(key).line : 0; }

  const std::string& text(const std::string& key) const { return entries_.at(key).value; }

  double number(const std::string& key) const {
    const auto value = parse_double(text(key));
    if (!value) throw ConfigError(line(key), key, "not a number: '" + text(key) + "'");
    return *value;
  }

  std::vector<double> list(const std::string& key) const {
    std::vector<double> out;
    std::string_view rest = text(key);
    if (trim(rest).empty()) return out;
    while (true) {
      const auto comma = rest.find(',');
      const auto token = rest.substr(0, comma);
      const auto value = parse_double(token);
      if (!value) {
        throw ConfigError(line(key), key, "not a number: '" + std::string(trim(token)) + "'");
      }
      out.push_back(*value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return out;
  }

 private:
  std::map<std::string, Entry> entries_;
};

SweepParameter parameter_from(const Document& doc) {
  const std::string& name = doc.text("sweep");
  if (name == "Omega") return SweepParameter::kOmega;
  if (name == "J") return SweepParameter::kJ;
  if (name == "T_system") return SweepParameter::kSystemTemperature;
  throw ConfigError(doc.line("sweep"), "sweep", "must be one of Omega, J, T_system; got '" + name + "'");
}

bool strength_ok(double x) { return x >= 0.0 && x <= std::numbers::pi / 2; }

void check_value(const Document& doc, const std::string& key, SweepParameter parameter,
                 double value) {
  if (parameter == SweepParameter::kSystemTemperature) {
    if (!(value > 0.0)) {
      throw ConfigError(doc.line(key), key, "temperature " + format_number(value) + " must be > 0");
    }
  } else if (!strength_ok(value)) {
    throw ConfigError(doc.line(key), key,
                      "value " + format_number(value) + " outside [0, pi/2]");
  }
}

}  // namespace

ConfigError::ConfigError(int line, std::string field, const std::string& message)
    : Error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
            (field.empty() ? std::string() : field + ": ") + message),
      line_(line),
      field_(std::move(field)) {}

std::string_view parameter_name(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kOmega:
      return "Omega";
    case SweepParameter::kJ:
      return "J";
    case SweepParameter::kSystemTemperature:
      return "T_system";
  }
  return "?";
}

RunConfig SweepSpec::config_for(double value) const {
  RunConfig config = base;
  switch (parameter) {
    case SweepParameter::kOmega:
      config.intracollision = value;
      break;
    case SweepParameter::kJ:
      config.system_coupling = value;
      break;
    case SweepParameter::kSystemTemperature:
      config.system_temperature = value;
      break;
  }
  return config;
}

SweepSpec parse_config(std::string_view text) {
  const Document doc(text);
  SweepSpec spec;
  RunConfig& base = spec.base;

  if (doc.has("mode")) {
    const std::string& mode = doc.text("mode");
    if (mode == "single") {
      base.mode = Mode::kSingle;
    } else if (mode == "multi") {
      base.mode = Mode::kMulti;
    } else {
      throw ConfigError(doc.line("mode"), "mode", "must be 'single' or 'multi'; got '" + mode + "'");
    }
  }

  if (doc.has("sweep")) {
    spec.parameter = parameter_from(doc);
    if (!doc.has("values")) throw ConfigError(doc.line("sweep"), "values", "missing sweep values");
    spec.values = doc.list("values");
    if (spec.values.empty()) throw ConfigError(doc.line("values"), "values", "sweep list is empty");
    for (double v : spec.values) check_value(doc, "values", spec.parameter, v);
  } else if (doc.has("values")) {
    throw ConfigError(doc.line("values"), "values", "given without `sweep`");
  }

  auto required = [&](const std::string& key, SweepParameter swept_as) -> std::optional<double> {
    const bool swept = doc.has("sweep") && spec.parameter == swept_as;
    if (!doc.has(key)) {
      if (swept) return std::nullopt;
      throw ConfigError(0, key, "missing required field");
    }
    const double value = doc.number(key);
    check_value(doc, key, swept_as, value);
    return value;
  };

  const auto t_system = required("T_system", SweepParameter::kSystemTemperature);
  const auto coupling = required("J", SweepParameter::kJ);
  const auto intracollision = required("Omega", SweepParameter::kOmega);
  base.system_temperature = t_system.value_or(0.0);
  base.system_coupling = coupling.value_or(0.0);
  base.intracollision = intracollision.value_or(0.0);

  if (!doc.has("T_reservoirs")) throw ConfigError(0, "T_reservoirs", "missing required field");
  base.reservoir_temperatures = doc.list("T_reservoirs");
  const int t_line = doc.line("T_reservoirs");
  if (base.reservoir_temperatures.empty()) {
    throw ConfigError(t_line, "T_reservoirs", "needs at least one temperature");
  }
  for (double t : base.reservoir_temperatures) {
    if (!(t > 0.0)) throw ConfigError(t_line, "T_reservoirs", "temperatures must be > 0");
  }
  if (base.mode == Mode::kSingle && base.reservoir_temperatures.size() != 1) {
    throw ConfigError(t_line, "T_reservoirs", "single mode takes exactly one temperature");
  }
  if (base.mode == Mode::kMulti &&
      (base.reservoir_temperatures.size() < 2 ||
       base.reservoir_temperatures.size() > static_cast<std::size_t>(kMaxReservoirs))) {
    throw ConfigError(t_line, "T_reservoirs",
                      "multi mode takes 2 to " + std::to_string(kMaxReservoirs) + " temperatures");
  }

  if (doc.has("n_collisions")) {
    const std::string& raw = doc.text("n_collisions");
    int n = 0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), n);
    if (ec != std::errc() || ptr != raw.data() + raw.size() || n < 1) {
      throw ConfigError(doc.line("n_collisions"), "n_collisions",
                        "must be a positive integer; got '" + raw + "'");
    }
    base.n_collisions = n;
  }
  if (doc.has("omega")) {
    base.omega = doc.number("omega");
    if (!(base.omega > 0.0)) throw ConfigError(doc.line("omega"), "omega", "must be > 0");
  }
  if (doc.has("output_dir")) {
    spec.output_dir = doc.text("output_dir");
    if (spec.output_dir.empty()) throw ConfigError(doc.line("output_dir"), "output_dir", "empty path");
  }

  if (!doc.has("sweep")) {
    spec.parameter = SweepParameter::kOmega;
    spec.values = {base.intracollision};
  } else {
    // A swept parameter without a base entry takes the first sweep value.
    const bool missing =
        (spec.parameter == SweepParameter::kOmega && !intracollision) ||
        (spec.parameter == SweepParameter::kJ && !coupling) ||
        (spec.parameter == SweepParameter::kSystemTemperature && !t_system);
    if (missing) base = spec.config_for(spec.values.front());
  }

  base.validate();
  return spec;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string serialize_config(const SweepSpec& spec) {
  const RunConfig& base = spec.base;
  std::ostringstream out;
  out << "mode = " << (base.mode == Mode::kSingle ? "single" : "multi") << '\n';
  out << "T_system = " << format_number(base.system_temperature) << '\n';
  out << "T_reservoirs = ";
  for (std::size_t m = 0; m < base.reservoir_temperatures.size(); ++m) {
    out << (m ? ", " : "") << format_number(base.reservoir_temperatures[m]);
  }
  out << '\n';
  out << "J = " << format_number(base.system_coupling) << '\n';
  out << "Omega = " << format_number(base.intracollision) << '\n';
  out << "n_collisions = " << base.n_collisions << '\n';
  out << "omega = " << format_number(base.omega) << '\n';
  out << "sweep = " << parameter_name(spec.parameter) << '\n';
  out << "values = ";
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    out << (i ? ", " : "") << format_number(spec.values[i]);
  }
  out << '\n';
  out << "output_dir = " << spec.output_dir << '\n';
  return out.str();
}

std::string run_file_name(SweepParameter parameter, double value) {
  return "run_" + std::string(parameter_name(parameter)) + "=" + format_number(value) + ".csv";
}

std::string csv_header(std::size_t reservoirs) {
  std::string header = "n,delta_S,delta_S_tilde,mutual_info,entropy_production";
  for (std::size_t m = 1; m <= reservoirs; ++m) {
    header += ",beta_" + std::to_string(m) + ",heat_" + std::to_string(m);
  }
  header += ",lhs,rhs,residual,heat_total,heat_dia,heat_coh,violated";
  return header;
}

std::string to_csv(const Trajectory& trajectory) {
  std::string out = csv_header(trajectory.config.num_reservoirs());
  out += '\n';
  for (const auto& r : trajectory.records) {
    out += std::to_string(r.n);
    for (double x : {r.delta_S, r.delta_S_tilde(), r.mutual_info_pre, r.entropy_production}) {
      out += ',' + g17(x);
    }
    for (const auto& term : r.reservoirs) out += ',' + g17(term.beta) + ',' + g17(term.heat);
    for (double x : {r.lhs, r.rhs, r.residual(), r.heat_total(), r.heat_dia, r.heat_coh}) {
      out += ',' + g17(x);
    }
    out += r.violated ? ",1\n" : ",0\n";
  }
  return out;
}

std::vector<int> heat_sign_changes(const Trajectory& trajectory) {
  std::vector<int> changes;
  const auto& records = trajectory.records;
  for (std::size_t k = 1; k < records.size(); ++k) {
    const double prev = records[k - 1].heat_total();
    const double cur = records[k].heat_total();
    if ((prev > 0.0 && cur < 0.0) || (prev < 0.0 && cur > 0.0)) changes.push_back(records[k].n);
  }
  return changes;
}

int first_negative_heat(const Trajectory& trajectory) {
  for (const auto& record : trajectory.records)
    if (record.heat_total() < 0.0) return record.n;
  return 0;
}

std::string render_summary(const SweepSpec& spec, const std::vector<RunOutcome>& runs) {
  const RunConfig& base = spec.base;
  json config;
  config["mode"] = base.mode == Mode::kSingle ? "single" : "multi";
  config["T_system"] = base.system_temperature;
  config["T_reservoirs"] = base.reservoir_temperatures;
  config["J"] = base.system_coupling;
  config["Omega"] = base.intracollision;
  config["n_collisions"] = base.n_collisions;
  config["omega"] = base.omega;
  config["sweep"] = std::string(parameter_name(spec.parameter));
  config["values"] = spec.values;
  config["gate_order"] = std::string(kGateOrder);
  config["window_policy"] = std::string(kWindowPolicy);

  json run_list = json::array();
  for (const auto& run : runs) {
    json entry;
    entry["parameter"] = std::string(parameter_name(spec.parameter));
    entry["value"] = run.value;
    entry["csv"] = run_file_name(spec.parameter, run.value);
    entry["max_abs_residual"] = run.trajectory.max_abs_residual();
    json intervals = json::array();
    for (const auto& iv : run.trajectory.violation_intervals) intervals.push_back({iv.first, iv.last});
    entry["violation_intervals"] = intervals;
    entry["heat_sign_changes"] = heat_sign_changes(run.trajectory);
    const int negative = first_negative_heat(run.trajectory);
    entry["first_negative_heat"] = negative > 0 ? json(negative) : json(nullptr);
    run_list.push_back(std::move(entry));
  }

  json summary;
  summary["config"] = std::move(config);
  summary["runs"] = std::move(run_list);
  return summary.dump(2) + "\n";
}

std::string report(std::string_view summary_json) {
  json summary;
  try {
    summary = json::parse(summary_json);
  } catch (const json::parse_error& e) {
    throw SummaryError(std::string("summary is not valid JSON: ") + e.what());
  }
  try {
    const auto& runs = summary.at("runs");
    if (!runs.is_array()) throw SummaryError("summary: 'runs' must be an array");
    std::ostringstream out;
    for (const auto& run : runs) {
      out << run.at("parameter").get<std::string>() << '=' << format_number(run.at("value").get<double>())
          << "  max|residual|=" << sci3(run.at("max_abs_residual").get<double>()) << "  violations: ";
      const auto& intervals = run.at("violation_intervals");
      if (intervals.empty()) {
        out << "none";
      } else {
        for (std::size_t i = 0; i < intervals.size(); ++i) {
          out << (i ? ", " : "") << "n∈[" << intervals[i].at(0).get<int>() << ','
              << intervals[i].at(1).get<int>() << ']';
        }
      }
      out << "  first negative heat: ";
      const auto& negative = run.at("first_negative_heat");
      if (negative.is_null()) {
        out << "none";
      } else {
        out << "n=" << negative.get<int>();
      }
      out << '\n';
    }
    return out.str();
  } catch (const json::exception& e) {
    throw SummaryError(std::string("malformed summary: ") + e.what());
  }
}

std::optional<std::string> ledger_identity_failure(SweepParameter parameter,
                                                   const std::vector<RunOutcome>& runs,
                                                   double threshold) {
  for (const auto& run : runs) {
    for (const auto& record : run.trajectory.records) {
      if (!(std::abs(record.residual()) <= threshold)) {
        return "ledger identity failure: " + std::string(parameter_name(parameter)) + '=' +
               format_number(run.value) + " at n=" + std::to_string(record.n) +
               ": |lhs - rhs| = " + sci3(std::abs(record.residual())) + " > " + sci3(threshold);
      }
    }
  }
  return std::nullopt;
}

namespace {

bool write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  out.close();
  return static_cast<bool>(out);
}

}  // namespace

int execute(const SweepSpec& spec, const std::filesystem::path& output_dir,
            std::ostream& diagnostics, unsigned jobs) {
  if (spec.values.empty()) {
    diagnostics << "validation error: sweep list is empty\n";
    return kExitValidation;
  }
  std::vector<RunConfig> configs;
  try {
    for (double value : spec.values) {
      configs.push_back(spec.config_for(value));
      configs.back().validate();
    }
  } catch (const Error& e) {
    diagnostics << "validation error: " << e.what() << '\n';
    return kExitValidation;
  }

  std::vector<RunOutcome> runs(configs.size());
  try {
    jobs = std::max(1u, jobs);
    for (std::size_t start = 0; start < configs.size(); start += jobs) {
      const std::size_t stop = std::min(configs.size(), start + jobs);
      std::vector<std::future<Trajectory>> pending;
      for (std::size_t i = start; i < stop; ++i) {
        pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                     [&config = configs[i]] { return run(config); }));
      }
      for (std::size_t i = start; i < stop; ++i) {
        runs[i] = RunOutcome{spec.values[i], pending[i - start].get()};
      }
    }
  } catch (const Error& e) {
    diagnostics << "simulation error: " << e.what() << '\n';
    return kExitValidation;
  }

  if (const auto failure = ledger_identity_failure(spec.parameter, runs)) {
    diagnostics << *failure << '\n';
    return kExitLedgerIdentity;
  }

  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) {
    diagnostics << "I/O error: cannot create " << output_dir << ": " << ec.message() << '\n';
    return kExitIo;
  }
  for (const auto& run : runs) {
    const auto path = output_dir / run_file_name(spec.parameter, run.value);
    if (!write_file(path, to_csv(run.trajectory))) {
      diagnostics << "I/O error: cannot write " << path << '\n';
      return kExitIo;
    }
  }
  const auto summary_path = output_dir / "summary.json";
  if (!write_file(summary_path, render_summary(spec, runs))) {
    diagnostics << "I/O error: cannot write " << summary_path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace landauer
