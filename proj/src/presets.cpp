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

#include "dualrail/presets.hpp"

namespace dualrail {

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

BasisState state(std::initializer_list<int> photons, int level = 0) {
  BasisState s;
  s.photons.resize(static_cast<Index>(photons.size()));
  Index i = 0;
  for (int n : photons) s.photons[i++] = n;
  s.level = level;
  return s;
}

}  // namespace

SystemSpec make_iswap_spec(const IswapParams& p) {
  // Interaction picture of the double-lambda scheme: diagonal
  // -D1 n1 + (D2-D1) n2 + (D2-D3) n3 + (D4-D3) n4.
  return SystemSpec(
      {"a", "b", "c", "d"},
      {Mode{2, "1"}, Mode{2, "2"}, Mode{2, "3"}, Mode{2, "4"}},
      {Coupling{"b", "a", 0, p.g_ab}, Coupling{"b", "c", 1, p.g_bc},
       Coupling{"d", "c", 2, p.g_cd}, Coupling{"d", "a", 3, p.g_da}},
      DiagonalForm{vec({-p.d1, p.d2 - p.d1, p.d2 - p.d3, p.d4 - p.d3}),
                   vec({0, 0, 0, 0})});
}

SystemSpec make_fredkin_spec(const FredkinParams& p) {
  // Time-independent interaction picture of the six-level loop, with the
  // frame term (n1+n2+n3+n6 - s_aa - s_cc) * eta folded into the linear form.
  const double eta = p.eta();
  return SystemSpec(
      {"a", "b", "c", "d", "e", "f"},
      {Mode{2, "1"}, Mode{2, "2"}, Mode{2, "3"}, Mode{2, "5"}, Mode{2, "6"}},
      {Coupling{"b", "a", 0, p.g_ab}, Coupling{"b", "c", 1, p.g_bc},
       Coupling{"d", "c", 2, p.g_cd}, Coupling{"d", "e", 0, p.g_de},
       Coupling{"f", "e", 3, p.g_ef}, Coupling{"f", "a", 4, p.g_fa}},
      DiagonalForm{vec({-p.d1 + eta, p.d2 - p.d1 + eta, p.d2 - p.d3 + eta,
                        p.d4 - p.d5, p.d6 - p.d5 + eta}),
                   vec({-eta, 0, -eta, 0, 0, 0})});
}

SystemSpec make_xrot_spec(const XRotParams& p) {
  // Single-excitation lambda scheme; the classical drive joins the ground
  // states with strength Omega/2 and carries the rotation-axis phase.
  return SystemSpec(
      {"a", "b", "c"}, {Mode{1, "1"}, Mode{1, "2"}},
      {Coupling{"b", "a", 0, p.g_ab}, Coupling{"b", "c", 1, p.g_bc},
       Coupling{"c", "a", kClassicalMode, p.omega / 2.0, p.drive_phase}},
      DiagonalForm{vec({0.0, p.d3}), vec({0.0, p.d1, p.d2 - p.d3})});
}

SystemSpec make_zrot_spec(const ZRotParams& p) {
  return SystemSpec({"a", "b"}, {Mode{1, "1"}},
                    {Coupling{"b", "a", 0, p.g}},
                    DiagonalForm{vec({0.0}), vec({0.0, p.delta})});
}

BasisState iswap_reference_seed() { return state({1, 0, 1, 0}); }

BasisState fredkin_reference_seed() { return state({1, 0, 1, 1, 0}); }

BasisState xrot_reference_seed() { return state({0, 1}); }

BasisState zrot_reference_seed() { return state({1}); }

}  // namespace dualrail
