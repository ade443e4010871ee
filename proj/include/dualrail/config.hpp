// Copyright 2026 The dualrail authors
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

#ifndef DUALRAIL_CONFIG_HPP
#define DUALRAIL_CONFIG_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dualrail/gates.hpp"

namespace dualrail {

struct SweepConfig {
  std::string parameter;  // a detuning/coupling name, or "delta" for the
                          // shared large detuning of the preset
  double from = 5.0;
  double to = 40.0;
  int points = 36;
  bool log_scale = false;
};

struct TimeGridConfig {
  double t_max = -1.0;  // <= 0: one interaction time
  int points = 200;
};

/// Declarative run configuration (JSON).  Unknown fields are rejected;
/// detunings may carry the token "auto" to be resonance-solved.
struct RunConfig {
  Gate gate = Gate::FredkinFast;
  std::map<std::string, double> couplings;  // "g" fans out to all cavity g's
  std::map<std::string, double> detunings;
  std::set<std::string> auto_detunings;
  std::optional<SweepConfig> sweep;
  TimeGridConfig time_grid;
  bool measure = false;
  PhaseMode phase_mode = PhaseMode::Population;
  bool polish = false;
  std::vector<int> input;     // logical input for `run`; default all-swap row
  double theta = 0.0;         // x-rotation angle; 0 = full period
  double drive_phase = 0.0;
  std::optional<double> g_hz; // g / 2pi in Hz, enables SI reporting
  std::string output;         // file path; empty = stdout
  int threads = 1;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
std::string dump_config(const RunConfig& config);  // normalized JSON

/// Resolve the configured couplings and detunings into a concrete gate setup,
/// solving the auto-marked detunings.  Throws ConfigError on unknown keys or
/// unsupported auto markers.
GateSetup resolve_setup(const RunConfig& config);

/// Detunings the resonance solver can fill in for each gate.
std::set<std::string> solvable_detunings(Gate gate);

}  // namespace dualrail

#endif  // DUALRAIL_CONFIG_HPP
