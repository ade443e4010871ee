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

#ifndef DUALRAIL_COMMANDS_HPP
#define DUALRAIL_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "dualrail/config.hpp"

namespace dualrail {

// Exit codes: 0 success, 2 config error, 3 numerical error, 4 measurement
// abort in single-run mode.  The wrappers throw; the CLI maps exceptions.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitMeasurementAbort = 4;

/// Full-precision (round-trip) decimal formatting used by all emitters.
std::string format_number(double value);

/// Run one gate and write a JSON record; human-readable summary to `report`.
/// Returns kExitMeasurementAbort when a requested measurement fails.
int cmd_run(const RunConfig& config, std::ostream& report);

/// CSV `t_g,pop_110a,pop_phi,pop_101a`: populations of the three oscillating
/// Fredkin states over the time grid.
int cmd_fig4(const RunConfig& config, std::ostream& report);

/// CSV `delta_over_g,fidelity_raw,fidelity_conditional,t_int_g`: detuning
/// sweep with per-point resonance solving.
int cmd_fig5(const RunConfig& config, std::ostream& report);

/// All-input truth table with per-row fidelities.
int cmd_truth_table(const RunConfig& config, std::ostream& report);

/// Print the resonance-solved detunings and their residuals.
int cmd_resonance(const RunConfig& config, std::ostream& report);

}  // namespace dualrail

#endif  // DUALRAIL_COMMANDS_HPP
