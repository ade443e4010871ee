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

#include "dualrail/commands.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace dualrail {

namespace {

using nlohmann::json;

void write_text(const std::string& path, const std::string& payload,
                std::ostream& fallback) {
  if (path.empty()) {
    fallback << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file: " + path);
  out << payload;
}

std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  bool first = true;
  for (double v : values) {
    if (!first) row += ',';
    row += format_number(v);
    first = false;
  }
  row += '\n';
  return row;
}

double gate_seconds(double t_g_units, double g_hz) {
  // g / 2pi = g_hz, so one 1/g unit is 1 / (2 pi g_hz) seconds.
  return t_g_units / (2.0 * std::numbers::pi * g_hz);
}

json run_record(const GateRun& run) {
  json rec;
  rec["gate"] = gate_name(run.gate);
  rec["input"] = run.input.bits;
  rec["target"] = run.target.bits;
  rec["t_gate"] = run.t_gate;
  rec["fidelity_raw"] = run.fidelity_raw;
  rec["fidelity_conditional"] = run.fidelity_conditional;
  rec["leakage"] = run.leakage;
  if (run.measurement) {
    rec["measurement"] = {
        {"success", run.measurement->success},
        {"probability", run.measurement->success_probability}};
  }
  if (run.swap_phase_error)
    rec["swap_phase_error"] = *run.swap_phase_error;
  return rec;
}

LogicalState default_input(Gate gate) {
  switch (gate) {
    case Gate::ISwap:
      return LogicalState{{1, 0}};
    case Gate::FredkinSlow:
    case Gate::FredkinFast:
      return LogicalState{{1, 1, 0}};
    case Gate::XRot:
    case Gate::ZRot:
      return LogicalState{{0}};
  }
  throw ConfigError("unknown gate");
}

RunOptions run_options(const RunConfig& config) {
  RunOptions opt;
  opt.measure = config.measure;
  opt.phase_mode = config.phase_mode;
  opt.theta = config.theta;
  return opt;
}

FredkinParams fredkin_params_at(const RunConfig& config, double delta) {
  RunConfig point = config;
  point.detunings["d1"] = delta;
  point.detunings["d2"] = delta;
  point.detunings["d4"] = delta;
  point.detunings["d5"] = delta;
  point.auto_detunings.insert("d3");
  point.auto_detunings.insert("d6");
  point.detunings.erase("d3");
  point.detunings.erase("d6");
  return std::get<FredkinParams>(resolve_setup(point).params);
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

int cmd_run(const RunConfig& config, std::ostream& report) {
  const GateSetup setup = resolve_setup(config);
  const LogicalState input =
      config.input.empty() ? default_input(config.gate)
                           : LogicalState{config.input};
  const GateRun run = run_gate(setup, input, run_options(config));

  report << "gate: " << gate_name(run.gate) << "\n";
  if (config.gate == Gate::FredkinFast) {
    const auto eff = fredkin3_closed_form(std::get<FredkinParams>(setup.params));
    report << "g1: " << format_number(eff.g1)
           << "  g2: " << format_number(eff.g2) << "\n";
  }
  report << "t_gate: " << format_number(run.t_gate) << " (1/g)\n";
  if (config.g_hz)
    report << "t_gate_s: " << format_number(gate_seconds(run.t_gate, *config.g_hz))
           << "\n";
  report << "fidelity_raw: " << format_number(run.fidelity_raw) << "\n";
  report << "fidelity_conditional: "
         << format_number(run.fidelity_conditional) << "\n";
  report << "leakage: " << format_number(run.leakage) << "\n";
  if (run.measurement)
    report << "measurement: " << (run.measurement->success ? "ok" : "ABORT")
           << " p=" << format_number(run.measurement->success_probability)
           << "\n";

  json rec = run_record(run);
  rec["config"] = json::parse(dump_config(config));
  if (config.g_hz) rec["t_gate_s"] = gate_seconds(run.t_gate, *config.g_hz);
  if (!config.output.empty()) write_text(config.output, rec.dump(2) + "\n", report);

  if (config.measure && run.measurement && !run.measurement->success)
    return kExitMeasurementAbort;
  return kExitOk;
}

int cmd_fig4(const RunConfig& config, std::ostream& report) {
  if (config.gate != Gate::FredkinFast && config.gate != Gate::FredkinSlow)
    throw ConfigError("fig4 needs a fredkin preset");
  const GateSetup setup = resolve_setup(config);
  const auto& params = std::get<FredkinParams>(setup.params);

  const LogicalState input{{1, 1, 0}};
  const LogicalState swapped{{1, 0, 1}};
  const Encoding enc = encode(config.gate, input);
  const Encoding target = encode(config.gate, swapped);

  const SystemSpec spec = make_fredkin_spec(params);
  const Basis basis = enumerate_basis(spec, enc.state);
  const OperatorMatrix h = build_hamiltonian(spec, basis);
  const Propagator prop(h);

  const auto it = basis.index_of(target.state);
  if (!it) throw NumericalError("swap partner unreachable from the seed");
  // |phi>, the auxiliary state of the three-state model, is the one d-level
  // member of the component.
  std::optional<Index> phi;
  const int d_level = spec.level_index("d");
  for (Index i = 0; i < basis.dimension(); ++i)
    if (basis[i].level == d_level) {
      if (phi) throw NumericalError("expected a single auxiliary d state");
      phi = i;
    }
  if (!phi) throw NumericalError("auxiliary d state unreachable");

  double t_max = config.time_grid.t_max;
  if (t_max <= 0.0) t_max = interaction_time(setup);
  const int points = config.time_grid.points;

  std::string csv = "t_g,pop_110a,pop_phi,pop_101a\n";
  const StateVector psi0 = basis_state_vector(basis, 0);
  for (int k = 0; k < points; ++k) {
    const double t = t_max * double(k) / double(points - 1);
    const StateVector psi = prop.apply(psi0, t);
    csv += csv_row({t, std::norm(psi.amplitudes[0]),
                    std::norm(psi.amplitudes[*phi]),
                    std::norm(psi.amplitudes[*it])});
  }
  write_text(config.output, csv, report);
  return kExitOk;
}

int cmd_fig5(const RunConfig& config, std::ostream& report) {
  if (config.gate != Gate::FredkinFast)
    throw ConfigError("fig5 needs the fredkin-fast preset");
  SweepConfig sweep;
  if (config.sweep) {
    if (config.sweep->parameter != "delta")
      throw ConfigError("fig5 sweeps the shared detuning \"delta\"");
    sweep = *config.sweep;
  }

  std::vector<double> deltas(static_cast<size_t>(sweep.points));
  for (int k = 0; k < sweep.points; ++k) {
    const double s = double(k) / double(sweep.points - 1);
    deltas[static_cast<size_t>(k)] =
        sweep.log_scale
            ? sweep.from * std::pow(sweep.to / sweep.from, s)
            : sweep.from + (sweep.to - sweep.from) * s;
  }

  struct Point {
    double delta, raw, conditional, t_int;
  };
  std::vector<Point> points(deltas.size());

  const auto eval = [&](size_t k) {
    const double delta = deltas[k];
    const FredkinParams params = fredkin_params_at(config, delta);
    const GateSetup setup{Gate::FredkinFast, params};
    RunOptions opt;
    opt.measure = true;
    const GateRun run = run_gate(setup, LogicalState{{1, 1, 0}}, opt);
    points[k] = {delta, run.fidelity_raw, run.fidelity_conditional,
                 run.t_gate};
  };

  const int threads = std::min<int>(config.threads,
                                    static_cast<int>(deltas.size()));
  if (threads <= 1) {
    for (size_t k = 0; k < deltas.size(); ++k) eval(k);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (size_t k = static_cast<size_t>(w); k < deltas.size();
             k += static_cast<size_t>(threads))
          eval(k);
      });
    for (auto& th : pool) th.join();
  }

  std::string csv = "delta_over_g,fidelity_raw,fidelity_conditional,t_int_g\n";
  for (const auto& p : points)
    csv += csv_row({p.delta, p.raw, p.conditional, p.t_int});
  write_text(config.output, csv, report);
  return kExitOk;
}

int cmd_truth_table(const RunConfig& config, std::ostream& report) {
  const GateSetup setup = resolve_setup(config);
  const TruthTable table = truth_table(setup, run_options(config));

  json rows = json::array();
  for (const auto& run : table.rows) {
    std::string in, out;
    for (int b : run.input.bits) in += char('0' + b);
    for (int b : run.target.bits) out += char('0' + b);
    report << "|" << in << "> -> |" << out
           << ">  fidelity_raw=" << format_number(run.fidelity_raw)
           << "  fidelity_conditional="
           << format_number(run.fidelity_conditional);
    if (run.swap_phase_error)
      report << "  phase_error=" << format_number(*run.swap_phase_error);
    report << "\n";
    rows.push_back(run_record(run));
  }
  report << "worst_row_fidelity=" << format_number(table.worst_fidelity)
         << "  worst_row_conditional="
         << format_number(table.worst_conditional) << "\n";
  if (!config.output.empty())
    write_text(config.output, json{{"rows", rows}}.dump(2) + "\n", report);
  return kExitOk;
}

int cmd_resonance(const RunConfig& config, std::ostream& report) {
  RunConfig solved = config;
  for (const auto& key : solvable_detunings(config.gate)) {
    solved.auto_detunings.insert(key);
    solved.detunings.erase(key);
  }
  const GateSetup setup = resolve_setup(solved);

  json out;
  out["gate"] = gate_name(config.gate);
  std::optional<EffectiveModel> em;
  switch (config.gate) {
    case Gate::ISwap: {
      const auto& p = std::get<IswapParams>(setup.params);
      out["detunings"] = {{"d1", p.d1}, {"d2", p.d2}, {"d3", p.d3},
                          {"d4", p.d4}};
      em = iswap_effective(p);
      out["g_eff"] = em->g_eff().real();
      break;
    }
    case Gate::FredkinSlow:
    case Gate::FredkinFast: {
      const auto& p = std::get<FredkinParams>(setup.params);
      out["detunings"] = {{"d1", p.d1}, {"d2", p.d2}, {"d3", p.d3},
                          {"d4", p.d4}, {"d5", p.d5}, {"d6", p.d6}};
      if (config.gate == Gate::FredkinFast) {
        em = fredkin3_effective(p);
        const auto eff = fredkin3_closed_form(p);
        out["g1"] = eff.g1;
        out["g2"] = eff.g2;
      } else {
        em = fredkin2_effective(p);
        out["g_eff"] = em->g_eff().real();
      }
      break;
    }
    case Gate::XRot: {
      const auto& p = std::get<XRotParams>(setup.params);
      out["detunings"] = {{"d1", p.d1}, {"d2", p.d2}, {"d3", p.d3}};
      em = xrot_effective(p);
      out["g_eff"] = std::abs(em->g_eff());
      break;
    }
    case Gate::ZRot: {
      const auto& p = std::get<ZRotParams>(setup.params);
      out["detunings"] = {{"delta", p.delta}};
      out["dispersive_shift"] = p.g * p.g / p.delta;
      break;
    }
  }
  if (em) {
    out["residuals"] = std::vector<double>(
        em->residual_detunings.data(),
        em->residual_detunings.data() + em->residual_detunings.size());
    if (em->asymmetry_warning())
      out["warning"] = "effective Hamiltonian asymmetry " +
                       format_number(em->max_asymmetry);
  }
  const std::string payload = out.dump(2) + "\n";
  write_text(config.output, payload, report);
  if (!config.output.empty()) report << payload;
  return kExitOk;
}

}  // namespace dualrail
