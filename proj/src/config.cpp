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

#include "dualrail/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dualrail {

namespace {

using nlohmann::json;

const std::set<std::string> kTopLevelFields = {
    "gate",   "couplings",  "detunings", "sweep",       "time_grid",
    "measure", "phase_mode", "polish",    "input",       "theta",
    "drive_phase", "g_hz",   "output",    "threads"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key))
      throw ConfigError("unknown field \"" + key + "\" in " + where);
}

double number_field(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number())
    throw ConfigError("field \"" + key + "\" must be a number");
  return obj[key].get<double>();
}

std::set<std::string> coupling_keys(Gate gate) {
  switch (gate) {
    case Gate::ISwap:
      return {"g", "g_ab", "g_bc", "g_cd", "g_da"};
    case Gate::FredkinSlow:
    case Gate::FredkinFast:
      return {"g", "g_ab", "g_bc", "g_cd", "g_de", "g_ef", "g_fa"};
    case Gate::XRot:
      return {"g", "g_ab", "g_bc", "omega"};
    case Gate::ZRot:
      return {"g"};
  }
  throw ConfigError("unknown gate");
}

std::set<std::string> detuning_keys(Gate gate) {
  switch (gate) {
    case Gate::ISwap:
      return {"d1", "d2", "d3", "d4"};
    case Gate::FredkinSlow:
    case Gate::FredkinFast:
      return {"d1", "d2", "d3", "d4", "d5", "d6"};
    case Gate::XRot:
      return {"d1", "d2", "d3"};
    case Gate::ZRot:
      return {"delta"};
  }
  throw ConfigError("unknown gate");
}

double coupling_value(const RunConfig& c, const std::string& key) {
  if (auto it = c.couplings.find(key); it != c.couplings.end())
    return it->second;
  if (auto it = c.couplings.find("g"); it != c.couplings.end())
    return it->second;
  return 1.0;
}

double detuning_value(const RunConfig& c, const std::string& key,
                      double fallback) {
  if (auto it = c.detunings.find(key); it != c.detunings.end())
    return it->second;
  return fallback;
}

}  // namespace

std::set<std::string> solvable_detunings(Gate gate) {
  switch (gate) {
    case Gate::ISwap:
      return {"d4"};
    case Gate::FredkinSlow:
      return {"d6"};
    case Gate::FredkinFast:
      return {"d3", "d6"};
    case Gate::XRot:
      return {"d3"};
    case Gate::ZRot:
      return {};
  }
  throw ConfigError("unknown gate");
}

namespace {

RunConfig parse_config_impl(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j, kTopLevelFields, "config");

  RunConfig c;
  if (j.contains("gate")) {
    const auto name = j["gate"].get<std::string>();
    const auto gate = gate_from_name(name);
    if (!gate) throw ConfigError("unknown gate id in field \"gate\": " + name);
    c.gate = *gate;
  }

  if (j.contains("couplings")) {
    const auto allowed = coupling_keys(c.gate);
    reject_unknown(j["couplings"], allowed, "couplings");
    for (const auto& [key, value] : j["couplings"].items()) {
      if (!value.is_number())
        throw ConfigError("coupling \"" + key + "\" must be a number");
      c.couplings[key] = value.get<double>();
    }
  }

  if (j.contains("detunings")) {
    const auto allowed = detuning_keys(c.gate);
    const auto solvable = solvable_detunings(c.gate);
    reject_unknown(j["detunings"], allowed, "detunings");
    for (const auto& [key, value] : j["detunings"].items()) {
      if (value.is_string()) {
        if (value.get<std::string>() != "auto")
          throw ConfigError("detuning \"" + key +
                            "\" must be a number or \"auto\"");
        if (!solvable.count(key))
          throw ConfigError("detuning \"" + key +
                            "\" cannot be resonance-solved for this gate");
        c.auto_detunings.insert(key);
      } else if (value.is_number()) {
        c.detunings[key] = value.get<double>();
      } else {
        throw ConfigError("detuning \"" + key +
                          "\" must be a number or \"auto\"");
      }
    }
  } else {
    for (const auto& key : solvable_detunings(c.gate))
      c.auto_detunings.insert(key);
  }

  if (j.contains("sweep")) {
    reject_unknown(j["sweep"], {"parameter", "from", "to", "points", "scale"},
                   "sweep");
    SweepConfig s;
    if (!j["sweep"].contains("parameter"))
      throw ConfigError("sweep needs a \"parameter\"");
    s.parameter = j["sweep"]["parameter"].get<std::string>();
    const auto names = detuning_keys(c.gate);
    const auto cnames = coupling_keys(c.gate);
    if (s.parameter != "delta" && !names.count(s.parameter) &&
        !cnames.count(s.parameter))
      throw ConfigError("sweep parameter \"" + s.parameter +
                        "\" names no detuning or coupling of this gate");
    s.from = number_field(j["sweep"], "from", s.from);
    s.to = number_field(j["sweep"], "to", s.to);
    s.points = static_cast<int>(number_field(j["sweep"], "points", s.points));
    if (s.points < 2) throw ConfigError("sweep needs at least 2 points");
    if (j["sweep"].contains("scale")) {
      const auto scale = j["sweep"]["scale"].get<std::string>();
      if (scale == "log")
        s.log_scale = true;
      else if (scale != "linear")
        throw ConfigError("sweep scale must be \"linear\" or \"log\"");
    }
    c.sweep = s;
  }

  if (j.contains("time_grid")) {
    reject_unknown(j["time_grid"], {"t_max", "points"}, "time_grid");
    c.time_grid.t_max = number_field(j["time_grid"], "t_max", -1.0);
    c.time_grid.points =
        static_cast<int>(number_field(j["time_grid"], "points", 200));
    if (c.time_grid.points < 2)
      throw ConfigError("time_grid needs at least 2 points");
  }

  if (j.contains("measure")) c.measure = j["measure"].get<bool>();
  if (j.contains("polish")) c.polish = j["polish"].get<bool>();
  if (j.contains("phase_mode")) {
    const auto mode = j["phase_mode"].get<std::string>();
    if (mode == "strict")
      c.phase_mode = PhaseMode::Strict;
    else if (mode == "population")
      c.phase_mode = PhaseMode::Population;
    else
      throw ConfigError("phase_mode must be \"population\" or \"strict\"");
  }
  if (j.contains("input")) {
    for (const auto& bit : j["input"]) {
      const int b = bit.get<int>();
      if (b != 0 && b != 1) throw ConfigError("input bits must be 0 or 1");
      c.input.push_back(b);
    }
    if (static_cast<int>(c.input.size()) != gate_arity(c.gate))
      throw ConfigError("input length does not match the gate arity");
  }
  c.theta = number_field(j, "theta", 0.0);
  c.drive_phase = number_field(j, "drive_phase", 0.0);
  if (j.contains("g_hz")) c.g_hz = j["g_hz"].get<double>();
  if (j.contains("output")) c.output = j["output"].get<std::string>();
  if (j.contains("threads")) {
    c.threads = j["threads"].get<int>();
    if (c.threads < 1) throw ConfigError("threads must be positive");
  }
  return c;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  try {
    return parse_config_impl(json_text);
  } catch (const json::exception& e) {
    // Wrong JSON types (string where an object is expected, etc.).
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string dump_config(const RunConfig& c) {
  json j;
  j["gate"] = gate_name(c.gate);
  j["couplings"] = json::object();
  for (const auto& [key, value] : c.couplings) j["couplings"][key] = value;
  j["detunings"] = json::object();
  for (const auto& [key, value] : c.detunings) j["detunings"][key] = value;
  for (const auto& key : c.auto_detunings) j["detunings"][key] = "auto";
  if (c.sweep) {
    j["sweep"] = {{"parameter", c.sweep->parameter},
                  {"from", c.sweep->from},
                  {"to", c.sweep->to},
                  {"points", c.sweep->points},
                  {"scale", c.sweep->log_scale ? "log" : "linear"}};
  }
  j["time_grid"] = {{"t_max", c.time_grid.t_max},
                    {"points", c.time_grid.points}};
  j["measure"] = c.measure;
  j["phase_mode"] =
      c.phase_mode == PhaseMode::Strict ? "strict" : "population";
  j["polish"] = c.polish;
  if (!c.input.empty()) j["input"] = c.input;
  if (c.theta != 0.0) j["theta"] = c.theta;
  if (c.drive_phase != 0.0) j["drive_phase"] = c.drive_phase;
  if (c.g_hz) j["g_hz"] = *c.g_hz;
  if (!c.output.empty()) j["output"] = c.output;
  j["threads"] = c.threads;
  return j.dump(2) + "\n";
}

GateSetup resolve_setup(const RunConfig& c) {
  const ResonanceOptions ropt{c.polish};
  switch (c.gate) {
    case Gate::ISwap: {
      IswapParams p;
      p.g_ab = coupling_value(c, "g_ab");
      p.g_bc = coupling_value(c, "g_bc");
      p.g_cd = coupling_value(c, "g_cd");
      p.g_da = coupling_value(c, "g_da");
      p.d1 = detuning_value(c, "d1", 20.0);
      p.d2 = detuning_value(c, "d2", 20.0);
      p.d3 = detuning_value(c, "d3", 20.0);
      p.d4 = detuning_value(c, "d4", 0.0);
      if (c.auto_detunings.count("d4"))
        p = solve_iswap_resonance(p, ropt).params;
      return {Gate::ISwap, p};
    }
    case Gate::FredkinSlow:
    case Gate::FredkinFast: {
      FredkinParams p;
      p.g_ab = coupling_value(c, "g_ab");
      p.g_bc = coupling_value(c, "g_bc");
      p.g_cd = coupling_value(c, "g_cd");
      p.g_de = coupling_value(c, "g_de");
      p.g_ef = coupling_value(c, "g_ef");
      p.g_fa = coupling_value(c, "g_fa");
      p.d1 = detuning_value(c, "d1", 20.0);
      p.d2 = detuning_value(c, "d2", 20.0);
      p.d3 = detuning_value(c, "d3", 20.0);
      p.d4 = detuning_value(c, "d4", 20.0);
      p.d5 = detuning_value(c, "d5", 20.0);
      p.d6 = detuning_value(c, "d6", 0.0);
      if (c.gate == Gate::FredkinFast) {
        const bool a3 = c.auto_detunings.count("d3") > 0;
        const bool a6 = c.auto_detunings.count("d6") > 0;
        if (a3 != a6)
          throw ConfigError(
              "fredkin-fast solves d3 and d6 together: mark both auto or "
              "fix both");
        if (a3) p = solve_fredkin3_resonance(p, ropt).params;
      } else if (c.auto_detunings.count("d6")) {
        p = solve_fredkin2_resonance(p, ropt).params;
      }
      return {c.gate, p};
    }
    case Gate::XRot: {
      XRotParams p;
      p.g_ab = coupling_value(c, "g_ab");
      p.g_bc = coupling_value(c, "g_bc");
      p.omega = c.couplings.count("omega") ? c.couplings.at("omega") : 2.0;
      p.d1 = detuning_value(c, "d1", 50.0);
      p.d2 = detuning_value(c, "d2", 50.0);
      p.d3 = detuning_value(c, "d3", 0.0);
      p.drive_phase = c.drive_phase;
      if (c.auto_detunings.count("d3"))
        p = solve_xrot_resonance(p, ropt).params;
      return {Gate::XRot, p};
    }
    case Gate::ZRot: {
      ZRotParams p;
      p.g = coupling_value(c, "g");
      p.delta = detuning_value(c, "delta", 100.0);
      return {Gate::ZRot, p};
    }
  }
  throw ConfigError("unknown gate");
}

}  // namespace dualrail
