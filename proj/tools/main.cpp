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

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dualrail/commands.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  bool measure = false;
  bool dump = false;
  std::string phase_mode;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--config", opt.config_path, "JSON run configuration");
  cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
  cmd->add_flag("--measure", opt.measure,
                "condition on measuring the atom in level a");
  cmd->add_option("--phase-mode", opt.phase_mode,
                  "population (default) or strict");
  cmd->add_option("--threads", opt.threads, "sweep worker threads");
  cmd->add_flag("--dump-config", opt.dump,
                "echo the normalized configuration and exit");
}

dualrail::RunConfig make_config(const CommonOptions& opt) {
  dualrail::RunConfig config;
  if (!opt.config_path.empty())
    config = dualrail::load_config(opt.config_path);
  if (!opt.out_path.empty()) config.output = opt.out_path;
  if (opt.measure) config.measure = true;
  if (!opt.phase_mode.empty()) {
    if (opt.phase_mode == "strict")
      config.phase_mode = dualrail::PhaseMode::Strict;
    else if (opt.phase_mode == "population")
      config.phase_mode = dualrail::PhaseMode::Population;
    else
      throw dualrail::ConfigError("--phase-mode must be population or strict");
  }
  if (opt.threads > 0) config.threads = opt.threads;
  return config;
}

int dispatch(const CommonOptions& opt,
             int (*command)(const dualrail::RunConfig&, std::ostream&)) {
  const dualrail::RunConfig config = make_config(opt);
  if (opt.dump) {
    std::cout << dualrail::dump_config(config);
    return dualrail::kExitOk;
  }
  return command(config, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dualrail: multiphoton cavity-QED gates on dual-rail photonic "
               "qubits"};
  app.require_subcommand(1);

  CommonOptions run_opt, fig4_opt, fig5_opt, table_opt, res_opt;
  auto* run = app.add_subcommand("run", "execute one gate and report");
  add_common(run, run_opt);
  auto* fig4 = app.add_subcommand(
      "fig4", "CSV of the three oscillating Fredkin populations");
  add_common(fig4, fig4_opt);
  auto* fig5 = app.add_subcommand(
      "fig5", "CSV of Fredkin fidelity and gate time over a detuning sweep");
  add_common(fig5, fig5_opt);
  auto* table =
      app.add_subcommand("truth-table", "run every logical input");
  add_common(table, table_opt);
  auto* resonance =
      app.add_subcommand("resonance", "print resonance-solved detunings");
  add_common(resonance, res_opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return dispatch(run_opt, dualrail::cmd_run);
    if (fig4->parsed()) return dispatch(fig4_opt, dualrail::cmd_fig4);
    if (fig5->parsed()) return dispatch(fig5_opt, dualrail::cmd_fig5);
    if (table->parsed()) return dispatch(table_opt, dualrail::cmd_truth_table);
    if (resonance->parsed()) return dispatch(res_opt, dualrail::cmd_resonance);
  } catch (const dualrail::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return dualrail::kExitConfig;
  } catch (const dualrail::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return dualrail::kExitConfig;
  } catch (const dualrail::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return dualrail::kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return dualrail::kExitOk;
}
