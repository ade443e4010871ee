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

#ifndef DUALRAIL_HILBERT_HPP
#define DUALRAIL_HILBERT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dualrail/system.hpp"
#include "dualrail/types.hpp"

namespace dualrail {

/// A labeled product state: per-mode photon numbers plus one atomic level
/// (stored as an index into SystemSpec::levels()).
struct BasisState {
  Eigen::VectorXi photons;
  int level = 0;

  friend bool operator==(const BasisState& a, const BasisState& b) {
    return a.level == b.level && a.photons == b.photons;
  }
};

/// Pretty-print as |n1 n2 ...; level>.
std::string to_string(const SystemSpec& spec, const BasisState& state);

/// An ordered set of basis states with O(log n) lookup.  Construction is via
/// enumerate_basis; immutable afterwards.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<BasisState> states);

  Index dimension() const { return static_cast<Index>(states_.size()); }
  const BasisState& operator[](Index i) const {
    return states_[static_cast<size_t>(i)];
  }
  const std::vector<BasisState>& states() const { return states_; }

  /// Position of `state`, or nullopt when the state is not a member.
  std::optional<Index> index_of(const BasisState& state) const;

  friend bool operator==(const Basis& a, const Basis& b) {
    return a.states_ == b.states_;
  }

 private:
  std::vector<BasisState> states_;
  std::map<std::vector<int>, Index> index_;
};

/// Connected component of `seed` under the off-diagonal coupling terms of
/// `spec`, breadth-first.  Within a generation, states are ordered by the
/// declaration index of the coupling that first reaches them, then by
/// photon-vector lexicographic order, then by level index.  Diagonal terms do
/// not extend reachability.
///
/// Throws ValidationError if the seed violates a cutoff or the component
/// exceeds `max_dimension`.
Basis enumerate_basis(const SystemSpec& spec, const BasisState& seed,
                      Index max_dimension = kDefaultMaxDimension);

/// Photon occupations plus the excitation weight of the atomic level;
/// conserved by every coupling term.
int total_excitation(const SystemSpec& spec, const BasisState& state);

}  // namespace dualrail

#endif  // DUALRAIL_HILBERT_HPP
