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

#include "dualrail/system.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace dualrail {

SystemSpec::SystemSpec(std::vector<std::string> level_names,
                       std::vector<Mode> modes, std::vector<Coupling> couplings,
                       DiagonalForm diagonal)
    : modes_(std::move(modes)),
      couplings_(std::move(couplings)),
      diagonal_(std::move(diagonal)) {
  std::set<std::string> seen;
  levels_.reserve(level_names.size());
  for (auto& name : level_names) {
    if (!seen.insert(name).second)
      throw ValidationError("duplicate level name: " + name);
    levels_.push_back(LevelLabel{std::move(name), 0});
  }
  if (levels_.empty()) throw ValidationError("a system needs at least one level");

  for (const auto& m : modes_) {
    if (m.cutoff < 1)
      throw ValidationError("mode cutoff must be at least 1");
  }

  coupling_levels_.reserve(couplings_.size());
  for (const auto& c : couplings_) {
    const int u = level_index(c.upper);
    const int l = level_index(c.lower);
    if (u == l) throw ValidationError("coupling must join two distinct levels");
    if (c.mode != kClassicalMode &&
        (c.mode < 0 || c.mode >= static_cast<int>(modes_.size())))
      throw ValidationError("coupling references an undeclared mode");
    if (!std::isfinite(c.strength) || !std::isfinite(c.phase))
      throw ValidationError("coupling strength and phase must be finite");
    coupling_levels_.emplace_back(u, l);
  }

  if (diagonal_.mode_coeffs.size() == 0)
    diagonal_.mode_coeffs = Eigen::VectorXd::Zero(num_modes());
  if (diagonal_.level_coeffs.size() == 0)
    diagonal_.level_coeffs = Eigen::VectorXd::Zero(num_levels());
  if (diagonal_.mode_coeffs.size() != num_modes() ||
      diagonal_.level_coeffs.size() != num_levels())
    throw ValidationError("diagonal coefficient sizes do not match the spec");
  if (!diagonal_.mode_coeffs.allFinite() || !diagonal_.level_coeffs.allFinite())
    throw ValidationError("diagonal coefficients must be finite");

  derive_excitation_weights();
}

int SystemSpec::level_index(std::string_view name) const {
  for (size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].name == name) return static_cast<int>(i);
  throw ValidationError("unknown level: " + std::string(name));
}

void SystemSpec::derive_excitation_weights() {
  // Propagate weights over the coupling graph: +1 from lower to upper across
  // a cavity coupling, equal across a classical drive.  An inconsistent cycle
  // means no conserved excitation number exists for this spec.
  const int n = static_cast<int>(levels_.size());
  std::vector<int> weight(static_cast<size_t>(n), 0);
  std::vector<bool> assigned(static_cast<size_t>(n), false);

  for (int root = 0; root < n; ++root) {
    if (assigned[static_cast<size_t>(root)]) continue;
    weight[static_cast<size_t>(root)] = 0;
    assigned[static_cast<size_t>(root)] = true;
    std::deque<int> queue{root};
    std::vector<int> component{root};
    while (!queue.empty()) {
      const int at = queue.front();
      queue.pop_front();
      for (size_t k = 0; k < couplings_.size(); ++k) {
        const auto [u, l] = coupling_levels_[k];
        if (u != at && l != at) continue;
        const int step = couplings_[k].mode == kClassicalMode ? 0 : 1;
        const int other = (u == at) ? l : u;
        const int expected = weight[static_cast<size_t>(at)] + (u == at ? -step : step);
        if (!assigned[static_cast<size_t>(other)]) {
          weight[static_cast<size_t>(other)] = expected;
          assigned[static_cast<size_t>(other)] = true;
          queue.push_back(other);
          component.push_back(other);
        } else if (weight[static_cast<size_t>(other)] != expected) {
          throw ValidationError(
              "couplings admit no consistent excitation weights (odd cycle "
              "through level " + levels_[static_cast<size_t>(other)].name + ")");
        }
      }
    }
    int lo = weight[static_cast<size_t>(component.front())];
    for (int i : component) lo = std::min(lo, weight[static_cast<size_t>(i)]);
    for (int i : component) weight[static_cast<size_t>(i)] -= lo;
  }

  for (int i = 0; i < n; ++i)
    levels_[static_cast<size_t>(i)].excitation_weight = weight[static_cast<size_t>(i)];
}

}  // namespace dualrail
