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

#ifndef DUALRAIL_SYSTEM_HPP
#define DUALRAIL_SYSTEM_HPP

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dualrail/errors.hpp"
#include "dualrail/types.hpp"

namespace dualrail {

/// An atomic level.  The excitation weight is the level's contribution to the
/// conserved total excitation number; weights are derived automatically from
/// the coupling graph (cavity couplings step the weight by one, classical
/// drives keep it), shifted so the minimum per connected component is zero.
struct LevelLabel {
  std::string name;
  int excitation_weight = 0;
};

/// A cavity mode with a Fock-space cutoff.  Two photons per mode is the
/// default: the Fredkin scheme populates a doubly occupied mode.
struct Mode {
  int cutoff = 2;
  std::string label;
};

/// Index value marking a classical drive instead of a cavity mode.
inline constexpr int kClassicalMode = -1;

/// One coupling term g (a sigma_ul + a^dag sigma_lu): absorbing a photon from
/// `mode` takes the atom from `lower` to `upper`.  For classical drives
/// (mode == kClassicalMode) no photon is exchanged and `strength` holds
/// Omega/2.  `phase` multiplies the raising matrix element by exp(i phase).
struct Coupling {
  std::string upper;
  std::string lower;
  int mode = kClassicalMode;
  double strength = 0.0;
  double phase = 0.0;
};

/// Diagonal (interaction-picture) energy as a linear form in the occupation
/// numbers and level projectors:  E(state) = sum_i mode_coeffs[i] * n_i
/// + level_coeffs[level].
struct DiagonalForm {
  Eigen::VectorXd mode_coeffs;
  Eigen::VectorXd level_coeffs;
};

/// Declarative system description: levels, modes, couplings and the diagonal.
/// Validated and immutable after construction; safe to share across threads.
class SystemSpec {
 public:
  SystemSpec(std::vector<std::string> level_names, std::vector<Mode> modes,
             std::vector<Coupling> couplings, DiagonalForm diagonal);

  const std::vector<LevelLabel>& levels() const { return levels_; }
  const std::vector<Mode>& modes() const { return modes_; }
  const std::vector<Coupling>& couplings() const { return couplings_; }
  const DiagonalForm& diagonal() const { return diagonal_; }

  Index num_levels() const { return static_cast<Index>(levels_.size()); }
  Index num_modes() const { return static_cast<Index>(modes_.size()); }

  /// Index of a level name; throws ValidationError if unknown.
  int level_index(std::string_view name) const;

  /// Level index pair (upper, lower) of a coupling, resolved once at
  /// construction.
  std::pair<int, int> coupling_levels(Index coupling_index) const {
    return coupling_levels_[static_cast<size_t>(coupling_index)];
  }

 private:
  void derive_excitation_weights();

  std::vector<LevelLabel> levels_;
  std::vector<Mode> modes_;
  std::vector<Coupling> couplings_;
  std::vector<std::pair<int, int>> coupling_levels_;
  DiagonalForm diagonal_;
};

}  // namespace dualrail

#endif  // DUALRAIL_SYSTEM_HPP
