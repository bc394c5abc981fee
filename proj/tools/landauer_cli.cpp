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

// landauer run <config> [--out DIR] [--jobs N]
// landauer report <summary.json>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "landauer/sweep.hpp"

namespace {

bool slurp(const std::string& path, std::string& content) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  content = buffer.str();
  return true;
}

int run_command(const std::string& config_path, const std::string& out_override, unsigned jobs) {
  std::string text;
  if (!slurp(config_path, text)) {
    std::cerr << "I/O error: cannot read " << config_path << '\n';
    return landauer::kExitIo;
  }
  landauer::SweepSpec spec;
  try {
    spec = landauer::parse_config(text);
  } catch (const landauer::Error& e) {
    std::cerr << config_path << ": " << e.what() << '\n';
    return landauer::kExitValidation;
  }
  const std::string out_dir = out_override.empty() ? spec.output_dir : out_override;
  const int status = landauer::execute(spec, out_dir, std::cerr, jobs);
  if (status == landauer::kExitOk) {
    std::string summary;
    if (slurp(out_dir + "/summary.json", summary)) std::cout << landauer::report(summary);
  }
  return status;
}

int report_command(const std::string& summary_path) {
  std::string text;
  if (!slurp(summary_path, text)) {
    std::cerr << "I/O error: cannot read " << summary_path << '\n';
    return landauer::kExitIo;
  }
  try {
    std::cout << landauer::report(text);
  } catch (const landauer::SummaryError& e) {
    std::cerr << summary_path << ": " << e.what() << '\n';
    return landauer::kExitValidation;
  }
  return landauer::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collision-model Landauer ledger simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  unsigned jobs = 1;
  auto* run = app.add_subcommand("run", "Execute a run or sweep and write CSV + summary.json");
  run->add_option("config", config_path, "Configuration document")->required();
  run->add_option("-o,--out", out_dir, "Output directory (overrides output_dir)");
  run->add_option("-j,--jobs", jobs, "Sweep values run concurrently")->check(CLI::PositiveNumber);

  std::string summary_path;
  auto* rep = app.add_subcommand("report", "Print a text table for a summary.json");
  rep->add_option("summary", summary_path, "summary.json path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : landauer::kExitValidation;
  }

  if (*run) return run_command(config_path, out_dir, jobs);
  return report_command(summary_path);
}
