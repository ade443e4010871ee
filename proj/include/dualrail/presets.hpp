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

#ifndef DUALRAIL_PRESETS_HPP
#define DUALRAIL_PRESETS_HPP

#include "dualrail/hilbert.hpp"
#include "dualrail/system.hpp"

namespace dualrail {

// Gate presets.  All detunings are the cumulative (multi-photon) Delta_j;
// couplings and detunings in units of the reference coupling g.

/// Double-lambda iSWAP: levels a..d, modes 1..4, chain
/// a -(1)-> b -(2)-> c ... with qubit pairs (1,2) and (4,3).
struct IswapParams {
  double g_ab = 1.0, g_bc = 1.0, g_cd = 1.0, g_da = 1.0;
  double d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0;
};

/// Six-level Fredkin loop: levels a..f, active modes (1,2,3,5,6) with mode 1
/// repeated on the a-b and d-e transitions; mode 4 is a bookkeeping label and
/// never enters the Hamiltonian.
struct FredkinParams {
  double g_ab = 1.0, g_bc = 1.0, g_cd = 1.0, g_de = 1.0, g_ef = 1.0, g_fa = 1.0;
  double d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0, d5 = 0.0, d6 = 0.0;

  double eta() const { return d1 - d3 + d4; }
};

/// Lambda scheme with a classical drive Omega/2 between the ground states;
/// the qubit lives on modes 1 and 2.  `drive_phase` is the phase of the
/// classical coupling (used to orient the rotation axis in the equator).
struct XRotParams {
  double g_ab = 1.0, g_bc = 1.0, omega = 2.0;
  double d1 = 0.0, d2 = 0.0, d3 = 0.0;
  double drive_phase = 0.0;
};

/// Detuned Jaynes-Cummings block on the first rail of a qubit.
struct ZRotParams {
  double g = 1.0;
  double delta = 0.0;
};

SystemSpec make_iswap_spec(const IswapParams& p);
SystemSpec make_fredkin_spec(const FredkinParams& p);
SystemSpec make_xrot_spec(const XRotParams& p);
SystemSpec make_zrot_spec(const ZRotParams& p);

/// Reference seeds used for the canonical effective-model reductions: the
/// states whose enumeration order reproduces the tridiagonal matrices of the
/// derivations (iswap |1010,a>, fredkin |10,01,10,a>, xrot |0,1,a>,
/// zrot |1,a>).
BasisState iswap_reference_seed();
BasisState fredkin_reference_seed();
BasisState xrot_reference_seed();
BasisState zrot_reference_seed();

}  // namespace dualrail

#endif  // DUALRAIL_PRESETS_HPP
