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

#include "dualrail/gates.hpp"

#include <cmath>
#include <numbers>

namespace dualrail {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr int kVirtualRail = -1;

struct RailPair {
  int first;   // mode carrying the logical 1
  int second;  // mode carrying the logical 0; kVirtualRail when untracked
};

// Qubit pairs in declared-mode indices.  iSWAP pairs (mode1,mode2) and
// (mode4,mode3); Fredkin pairs (mode1,mode4) (mode4 virtual), (mode2,mode3),
// (mode5,mode6); rotations pair the two rails of a single qubit, with the
// idle z-rotation rail virtual.
std::vector<RailPair> rail_pairs(Gate gate) {
  switch (gate) {
    case Gate::ISwap:
      return {{0, 1}, {3, 2}};
    case Gate::FredkinSlow:
    case Gate::FredkinFast:
      return {{0, kVirtualRail}, {1, 2}, {3, 4}};
    case Gate::XRot:
      return {{0, 1}};
    case Gate::ZRot:
      return {{0, kVirtualRail}};
  }
  throw ValidationError("unknown gate");
}

Index num_gate_modes(Gate gate) {
  switch (gate) {
    case Gate::ISwap:
      return 4;
    case Gate::FredkinSlow:
    case Gate::FredkinFast:
      return 5;
    case Gate::XRot:
      return 2;
    case Gate::ZRot:
      return 1;
  }
  throw ValidationError("unknown gate");
}

SystemSpec setup_spec(const GateSetup& setup) {
  switch (setup.gate) {
    case Gate::ISwap:
      return make_iswap_spec(std::get<IswapParams>(setup.params));
    case Gate::FredkinSlow:
    case Gate::FredkinFast:
      return make_fredkin_spec(std::get<FredkinParams>(setup.params));
    case Gate::XRot:
      return make_xrot_spec(std::get<XRotParams>(setup.params));
    case Gate::ZRot:
      return make_zrot_spec(std::get<ZRotParams>(setup.params));
  }
  throw ValidationError("unknown gate");
}

}  // namespace

int gate_arity(Gate gate) {
  switch (gate) {
    case Gate::ISwap:
      return 2;
    case Gate::FredkinSlow:
    case Gate::FredkinFast:
      return 3;
    case Gate::XRot:
    case Gate::ZRot:
      return 1;
  }
  throw ValidationError("unknown gate");
}

std::string gate_name(Gate gate) {
  switch (gate) {
    case Gate::ISwap:
      return "iswap";
    case Gate::FredkinSlow:
      return "fredkin-slow";
    case Gate::FredkinFast:
      return "fredkin-fast";
    case Gate::XRot:
      return "xrot";
    case Gate::ZRot:
      return "zrot";
  }
  throw ValidationError("unknown gate");
}

std::optional<Gate> gate_from_name(const std::string& name) {
  if (name == "iswap") return Gate::ISwap;
  if (name == "fredkin-slow") return Gate::FredkinSlow;
  if (name == "fredkin-fast" || name == "fredkin") return Gate::FredkinFast;
  if (name == "xrot") return Gate::XRot;
  if (name == "zrot") return Gate::ZRot;
  return std::nullopt;
}

Encoding encode(Gate gate, const LogicalState& logical) {
  const auto pairs = rail_pairs(gate);
  if (logical.bits.size() != pairs.size())
    throw ValidationError("logical state arity does not match the gate");
  Encoding enc;
  enc.state.photons = Eigen::VectorXi::Zero(num_gate_modes(gate));
  enc.state.level = 0;  // atom enters in a
  for (size_t q = 0; q < pairs.size(); ++q) {
    const int bit = logical.bits[q];
    if (bit != 0 && bit != 1)
      throw ValidationError("logical bits must be 0 or 1");
    if (bit == 1)
      enc.state.photons[pairs[q].first] = 1;
    else if (pairs[q].second != kVirtualRail)
      enc.state.photons[pairs[q].second] = 1;
    if (pairs[q].second == kVirtualRail)
      enc.virtual_photons.push_back(1 - bit);
  }
  return enc;
}

std::optional<LogicalState> decode(Gate gate, const BasisState& state,
                                   const std::vector<int>& virtual_photons) {
  if (state.level != 0) return std::nullopt;  // ancilla must exit in a
  const auto pairs = rail_pairs(gate);
  LogicalState logical;
  size_t vidx = 0;
  for (const auto& pair : pairs) {
    const int n_first = state.photons[pair.first];
    int n_second;
    if (pair.second == kVirtualRail) {
      if (vidx >= virtual_photons.size())
        throw ValidationError("missing virtual rail occupation");
      n_second = virtual_photons[vidx++];
    } else {
      n_second = state.photons[pair.second];
    }
    if (n_first + n_second != 1) return std::nullopt;  // excitation lost/moved
    logical.bits.push_back(n_first);
  }
  return logical;
}

LogicalState truth_table_target(Gate gate, const LogicalState& input) {
  LogicalState out = input;
  switch (gate) {
    case Gate::ISwap:
      std::swap(out.bits[0], out.bits[1]);
      break;
    case Gate::FredkinSlow:
    case Gate::FredkinFast:
      if (input.bits[0] == 1) std::swap(out.bits[1], out.bits[2]);
      break;
    case Gate::XRot:
    case Gate::ZRot:
      break;  // full-period convention: identity
  }
  return out;
}

double interaction_time(const GateSetup& setup, double theta) {
  switch (setup.gate) {
    case Gate::ISwap: {
      const auto em = iswap_effective(std::get<IswapParams>(setup.params));
      const double g = std::abs(em.g_eff());
      if (g == 0.0) throw NumericalError("iswap effective coupling vanishes");
      return std::numbers::pi / (2.0 * g);
    }
    case Gate::FredkinSlow: {
      const auto em = fredkin2_effective(std::get<FredkinParams>(setup.params));
      const double g = std::abs(em.g_eff());
      if (g == 0.0) throw NumericalError("fredkin effective coupling vanishes");
      return std::numbers::pi / (2.0 * g);
    }
    case Gate::FredkinFast: {
      // The three-state model's own prediction: closed-form g1, g2.
      const auto eff = fredkin3_closed_form(std::get<FredkinParams>(setup.params));
      const double gp = std::hypot(eff.g1, eff.g2);
      if (gp == 0.0) throw NumericalError("fredkin effective coupling vanishes");
      return std::numbers::pi / gp;
    }
    case Gate::XRot: {
      const auto em = xrot_effective(std::get<XRotParams>(setup.params));
      const double g = std::abs(em.g_eff());
      if (g == 0.0) throw NumericalError("x-rotation effective coupling vanishes");
      return theta / g;
    }
    case Gate::ZRot: {
      const auto& p = std::get<ZRotParams>(setup.params);
      if (p.delta == 0.0 || p.g == 0.0)
        throw NumericalError("z rotation needs a dispersive shift");
      return theta * p.delta / (p.g * p.g);
    }
  }
  throw ValidationError("unknown gate");
}

GateRun run_gate(const GateSetup& setup, const LogicalState& input,
                 const RunOptions& options) {
  GateRun run;
  run.gate = setup.gate;
  run.input = input;
  run.target = truth_table_target(setup.gate, input);

  const Encoding enc = encode(setup.gate, input);
  const Encoding target_enc = encode(setup.gate, run.target);

  const SystemSpec spec = setup_spec(setup);
  const Basis basis = enumerate_basis(spec, enc.state);
  const OperatorMatrix h = build_hamiltonian(spec, basis);

  double theta = options.theta;
  if (setup.gate == Gate::XRot && theta == 0.0)
    theta = 2.0 * std::numbers::pi;  // truth-table convention: full period
  run.t_gate = options.time_override >= 0.0
                   ? options.time_override
                   : interaction_time(setup, theta);

  const Propagator prop(h);
  run.final_state = prop.apply(basis_state_vector(basis, 0), run.t_gate);

  StateVector target_vec{basis,
                         Eigen::VectorXcd::Zero(basis.dimension())};
  if (const auto ti = basis.index_of(target_enc.state))
    target_vec.amplitudes[*ti] = 1.0;
  run.fidelity_raw = overlap_magnitude(run.final_state, target_vec);

  double valid_population = 0.0;
  for (Index i = 0; i < basis.dimension(); ++i)
    if (decode(setup.gate, basis[i], enc.virtual_photons))
      valid_population += std::norm(run.final_state.amplitudes[i]);
  run.leakage = 1.0 - valid_population;

  run.fidelity_conditional = run.fidelity_raw;
  if (options.measure) {
    const auto outcome =
        project_atom(run.final_state, spec.level_index("a"));
    run.fidelity_conditional =
        outcome.success ? overlap_magnitude(outcome.projected, target_vec) : 0.0;
    run.measurement = outcome;
  }

  if (options.phase_mode == PhaseMode::Strict && setup.gate == Gate::ISwap &&
      run.target != input) {
    const double phase =
        iswap_swap_phase(std::get<IswapParams>(setup.params));
    run.swap_phase_error = std::abs(phase - std::numbers::pi / 2.0);
  }
  return run;
}

TruthTable truth_table(const GateSetup& setup, const RunOptions& options) {
  TruthTable table;
  const int arity = gate_arity(setup.gate);
  const int rows = 1 << arity;
  table.worst_fidelity = 1.0;
  table.worst_conditional = 1.0;
  for (int mask = 0; mask < rows; ++mask) {
    LogicalState input;
    for (int q = arity - 1; q >= 0; --q)
      input.bits.push_back((mask >> q) & 1);
    table.rows.push_back(run_gate(setup, input, options));
    table.worst_fidelity =
        std::min(table.worst_fidelity, table.rows.back().fidelity_raw);
    table.worst_conditional = std::min(table.worst_conditional,
                                       table.rows.back().fidelity_conditional);
  }
  return table;
}

double iswap_swap_phase(const IswapParams& params) {
  // At half the gate time both amplitudes are comparable and their ratio is
  // -i tan(g_eff t): frame phases common to the qubit sector cancel.
  const GateSetup setup{Gate::ISwap, params};
  const double t_half = interaction_time(setup) / 2.0;
  const SystemSpec spec = make_iswap_spec(params);
  const Encoding enc = encode(Gate::ISwap, LogicalState{{1, 0}});
  const Basis basis = enumerate_basis(spec, enc.state);
  const OperatorMatrix h = build_hamiltonian(spec, basis);
  const StateVector psi = evolve(h, basis_state_vector(basis, 0), t_half);
  const Encoding swapped = encode(Gate::ISwap, LogicalState{{0, 1}});
  const auto ti = basis.index_of(swapped.state);
  if (!ti) throw ValidationError("swapped state unreachable");
  const Complex ratio = psi.amplitudes[*ti] / psi.amplitudes[0];
  return std::arg(ratio);
}

GateRun run_xrot(const XRotParams& params, int bit, double theta,
                 bool measure) {
  const GateSetup setup{Gate::XRot, params};
  GateRun run;
  run.gate = Gate::XRot;
  run.input = LogicalState{{bit}};
  run.target = run.input;

  const Encoding enc = encode(Gate::XRot, run.input);
  const Encoding flipped = encode(Gate::XRot, LogicalState{{1 - bit}});
  const SystemSpec spec = make_xrot_spec(params);
  const Basis basis = enumerate_basis(spec, enc.state);
  const OperatorMatrix h = build_hamiltonian(spec, basis);
  run.t_gate = interaction_time(setup, theta);
  run.final_state = evolve(h, basis_state_vector(basis, 0), run.t_gate);

  // R_x(theta) with the drive-phase convention:
  // cos(theta)|b> - i e^{i phase} sin(theta)|1-b>.
  StateVector target_vec{basis, Eigen::VectorXcd::Zero(basis.dimension())};
  target_vec.amplitudes[0] = std::cos(theta);
  const auto fi = basis.index_of(flipped.state);
  if (!fi) throw ValidationError("flipped rail state unreachable");
  target_vec.amplitudes[*fi] =
      -kI * std::exp(kI * params.drive_phase) * std::sin(theta);
  run.fidelity_raw = overlap_magnitude(run.final_state, target_vec);

  run.fidelity_conditional = run.fidelity_raw;
  if (measure) {
    const auto outcome = project_atom(run.final_state, spec.level_index("a"));
    run.fidelity_conditional =
        outcome.success ? overlap_magnitude(outcome.projected, target_vec) : 0.0;
    run.measurement = outcome;
  }
  return run;
}

double zrot_phase(double g, double delta, double t) {
  if (delta == 0.0)
    throw ValidationError("z rotation is dispersive: delta must be nonzero");
  if (g == 0.0) return 0.0;
  const ZRotParams params{g, delta};
  const SystemSpec spec = make_zrot_spec(params);
  const Basis basis = enumerate_basis(spec, zrot_reference_seed());
  const OperatorMatrix h = build_hamiltonian(spec, basis);
  const Propagator prop(h);
  const StateVector psi0 = basis_state_vector(basis, 0);

  // Unwrap the phase of the |1>-rail amplitude on a grid fine enough that
  // each step advances it by well under pi.
  const double rate = std::abs(delta) + 2.0 * std::abs(g);
  const auto steps = static_cast<long>(
      std::ceil(std::abs(t) * rate / (std::numbers::pi / 4.0))) + 1;
  double accumulated = 0.0;
  double previous = 0.0;
  for (long k = 1; k <= steps; ++k) {
    const double tk = t * double(k) / double(steps);
    const Complex amp = prop.apply(psi0, tk).amplitudes[0];
    const double raw = std::arg(amp);
    double step = raw - previous;
    while (step > std::numbers::pi) step -= 2.0 * std::numbers::pi;
    while (step < -std::numbers::pi) step += 2.0 * std::numbers::pi;
    accumulated += step;
    previous = raw;
  }
  return accumulated;
}

}  // namespace dualrail
