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

#include "dualrail/hilbert.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace dualrail {

namespace {

std::vector<int> state_key(const BasisState& s) {
  std::vector<int> key(static_cast<size_t>(s.photons.size()) + 1);
  for (Index i = 0; i < s.photons.size(); ++i)
    key[static_cast<size_t>(i)] = s.photons[i];
  key.back() = s.level;
  return key;
}

// One hop along a coupling; nullopt when the term annihilates the state.
// Zero-strength couplings contribute no off-diagonal term and do not extend
// reachability.
std::optional<BasisState> apply_coupling(const SystemSpec& spec, Index k,
                                         const BasisState& s, bool raise) {
  const auto& c = spec.couplings()[static_cast<size_t>(k)];
  if (c.strength == 0.0) return std::nullopt;
  const auto [upper, lower] = spec.coupling_levels(k);
  if (c.mode == kClassicalMode) {
    if (raise && s.level == lower) return BasisState{s.photons, upper};
    if (!raise && s.level == upper) return BasisState{s.photons, lower};
    return std::nullopt;
  }
  if (raise) {  // absorb a photon, lower -> upper
    if (s.level != lower || s.photons[c.mode] == 0) return std::nullopt;
    BasisState next{s.photons, upper};
    next.photons[c.mode] -= 1;
    return next;
  }
  // emit a photon, upper -> lower
  if (s.level != upper) return std::nullopt;
  if (s.photons[c.mode] >= spec.modes()[static_cast<size_t>(c.mode)].cutoff)
    return std::nullopt;
  BasisState next{s.photons, lower};
  next.photons[c.mode] += 1;
  return next;
}

}  // namespace

std::string to_string(const SystemSpec& spec, const BasisState& state) {
  std::ostringstream out;
  out << '|';
  for (Index i = 0; i < state.photons.size(); ++i) out << state.photons[i];
  out << ',' << spec.levels()[static_cast<size_t>(state.level)].name << '>';
  return out.str();
}

Basis::Basis(std::vector<BasisState> states) : states_(std::move(states)) {
  for (size_t i = 0; i < states_.size(); ++i) {
    if (!index_.emplace(state_key(states_[i]), static_cast<Index>(i)).second)
      throw ValidationError("duplicate state in basis");
  }
}

std::optional<Index> Basis::index_of(const BasisState& state) const {
  const auto it = index_.find(state_key(state));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Basis enumerate_basis(const SystemSpec& spec, const BasisState& seed,
                      Index max_dimension) {
  if (seed.photons.size() != spec.num_modes())
    throw ValidationError("seed has the wrong number of modes");
  if (seed.level < 0 || seed.level >= spec.num_levels())
    throw ValidationError("seed level out of range");
  for (Index m = 0; m < seed.photons.size(); ++m) {
    const int cutoff = spec.modes()[static_cast<size_t>(m)].cutoff;
    if (seed.photons[m] < 0 || seed.photons[m] > cutoff)
      throw ValidationError("seed occupation violates the cutoff of mode " +
                            std::to_string(m + 1));
  }

  std::vector<BasisState> states{seed};
  std::map<std::vector<int>, Index> seen{{state_key(seed), 0}};

  // (discovering coupling index, photons lex, level) orders each generation.
  using Tagged = std::tuple<Index, std::vector<int>, int, BasisState>;
  std::vector<BasisState> frontier{seed};
  while (!frontier.empty()) {
    std::vector<Tagged> generation;
    for (const auto& s : frontier) {
      for (Index k = 0; k < static_cast<Index>(spec.couplings().size()); ++k) {
        for (const bool raise : {true, false}) {
          auto next = apply_coupling(spec, k, s, raise);
          if (!next) continue;
          const auto key = state_key(*next);
          if (seen.count(key)) continue;
          std::vector<int> lex(key.begin(), key.end() - 1);
          generation.emplace_back(k, std::move(lex), next->level,
                                  std::move(*next));
        }
      }
    }
    std::sort(generation.begin(), generation.end(),
              [](const Tagged& a, const Tagged& b) {
                return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
                       std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
              });
    frontier.clear();
    for (auto& [k, lex, level, state] : generation) {
      const auto key = state_key(state);
      if (seen.count(key)) continue;  // discovered twice within the generation
      seen.emplace(key, static_cast<Index>(states.size()));
      states.push_back(state);
      frontier.push_back(std::move(state));
      if (static_cast<Index>(states.size()) > max_dimension)
        throw ValidationError("reachable set exceeds the dimension cap of " +
                              std::to_string(max_dimension));
    }
  }
  return Basis(std::move(states));
}

int total_excitation(const SystemSpec& spec, const BasisState& state) {
  if (state.level < 0 || state.level >= spec.num_levels())
    throw ValidationError("state level out of range");
  int n = state.photons.sum();
  n += spec.levels()[static_cast<size_t>(state.level)].excitation_weight;
  return n;
}

}  // namespace dualrail
