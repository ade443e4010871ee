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

#ifndef DUALRAIL_GATES_HPP
#define DUALRAIL_GATES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dualrail/dynamics.hpp"
#include "dualrail/effective.hpp"
#include "dualrail/presets.hpp"

namespace dualrail {

enum class Gate { ISwap, FredkinSlow, FredkinFast, XRot, ZRot };

int gate_arity(Gate gate);
std::string gate_name(Gate gate);
std::optional<Gate> gate_from_name(const std::string& name);

/// A fully parameterized gate instance.  Detunings must already be
/// resonance-solved where required (see solve_*_resonance).
struct GateSetup {
  Gate gate = Gate::FredkinFast;
  std::variant<IswapParams, FredkinParams, XRotParams, ZRotParams> params;
};

/// Logical input, one bit per qubit.
struct LogicalState {
  std::vector<int> bits;

  friend bool operator==(const LogicalState&, const LogicalState&) = default;
};

/// Dual-rail encoding of a logical state.  Rails whose partner mode is not
/// resonant with any transition (Fredkin mode 4, the idle z-rotation rail)
/// are tracked as constants in `virtual_photons`, never in the Basis.
struct Encoding {
  BasisState state;                  // physical modes, atom in a
  std::vector<int> virtual_photons;  // occupation of each virtual rail
};

/// Logical -> physical: each 1 puts the excitation in the first mode of its
/// pair, each 0 in the second.  Throws ValidationError on arity mismatch.
Encoding encode(Gate gate, const LogicalState& logical);

/// Physical -> logical where defined: any pair with total occupation != 1,
/// or the atom away from level a, decodes as nullopt (invalid).
std::optional<LogicalState> decode(Gate gate, const BasisState& state,
                                   const std::vector<int>& virtual_photons);

/// Truth-table image of an input (iSWAP swaps, Fredkin swaps targets iff the
/// control is set; rotations at a full period are the identity).
LogicalState truth_table_target(Gate gate, const LogicalState& input);

/// Gate time: pi/g' (closed-form g1,g2) for the fast Fredkin,
/// pi/(2|g_eff|) (numeric reduction) for iSWAP and the slow Fredkin,
/// theta/|g_eff| for the x rotation.  Throws NumericalError when the
/// effective coupling vanishes.
double interaction_time(const GateSetup& setup, double theta = 0.0);

enum class PhaseMode { Population, Strict };

struct RunOptions {
  bool measure = false;
  PhaseMode phase_mode = PhaseMode::Population;
  double theta = 0.0;          // x rotation angle
  double time_override = -1.0; // <0: use interaction_time
};

/// One gate execution record.  fidelity_raw and fidelity_conditional report
/// the overlap magnitude |<target|psi>| against the truth-table target (the
/// convention of the reference values; square for population fidelity).
struct GateRun {
  Gate gate;
  LogicalState input;
  LogicalState target;
  double t_gate = 0.0;
  StateVector final_state;
  std::optional<MeasurementOutcome> measurement;
  double fidelity_raw = 0.0;
  double fidelity_conditional = 0.0;   // NaN-free: equals raw when no measure
  double leakage = 0.0;                // population off the valid logical states
  std::optional<double> swap_phase_error;  // phase-strict iSWAP check, radians
};

GateRun run_gate(const GateSetup& setup, const LogicalState& input,
                 const RunOptions& options = {});

struct TruthTable {
  std::vector<GateRun> rows;
  double worst_fidelity = 0.0;
  double worst_conditional = 0.0;
};

TruthTable truth_table(const GateSetup& setup, const RunOptions& options = {});

/// Phase of the swapped relative to the unswapped amplitude at half the gate
/// time; pi/2 is the iSWAP's i.  Frame-independent (common dynamical phases
/// cancel in the ratio).
double iswap_swap_phase(const IswapParams& params);

/// x-rotation run against the rotated target
/// cos(theta)|b> - i e^{i drive_phase} sin(theta)|1-b>.
GateRun run_xrot(const XRotParams& params, int bit, double theta,
                 bool measure = false);

/// Accumulated dispersive phase of the |1> rail relative to the idle |0>
/// rail after time t, from the exact two-level block ((0, g), (g, delta)).
/// First order this is (g^2/delta) t.  Throws ValidationError at delta = 0.
double zrot_phase(double g, double delta, double t);

}  // namespace dualrail

#endif  // DUALRAIL_GATES_HPP
