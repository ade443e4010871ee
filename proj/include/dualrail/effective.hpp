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

#ifndef DUALRAIL_EFFECTIVE_HPP
#define DUALRAIL_EFFECTIVE_HPP

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dualrail/hamiltonian.hpp"
#include "dualrail/presets.hpp"
#include "dualrail/types.hpp"

namespace dualrail {

/// P/Q split of a basis: p holds the near-resonant state indices, q the
/// far-detuned ones.  Disjoint, covering, both in basis order.
struct Partition {
  std::vector<Index> p;
  std::vector<Index> q;
};

/// Partition with P = the states whose atomic level is in `resonant_levels`
/// (by name), preserving basis order.
Partition partition_by_levels(const SystemSpec& spec, const Basis& basis,
                              std::span<const std::string> resonant_levels);

/// Result of the P/Q reduction H_eff = H0 - B A^{-1} B^dag.
struct EffectiveModel {
  Eigen::MatrixXcd h_eff;               // |P| x |P|, symmetrized
  Eigen::VectorXd shifts;               // Re diag(h_eff - H0): level shifts
  Eigen::VectorXd residual_detunings;   // Re diag(h_eff) - Re h_eff(0,0)
  double max_asymmetry = 0.0;           // before symmetrization
  double condition = 0.0;               // spectral condition number of A

  Complex g_eff(Index i = 0, Index j = 1) const { return h_eff(i, j); }

  // Asymmetry is symmetrized away and reported, never fatal.
  bool asymmetry_warning() const { return max_asymmetry > 1e-10; }
};

/// Schur-complement reduction; A is inverted through a partially pivoted
/// dense solve, never formed explicitly.  Throws NumericalError when A is
/// singular or its spectral condition number exceeds `condition_bound`
/// (a near-resonant state was misassigned to Q).
EffectiveModel schur_reduce(const OperatorMatrix& h, const Partition& partition,
                            double condition_bound = kDefaultConditionBound);

// Closed-form effective parameters, exactly as derived.  Approximate forms
// drop the O(g^2/Delta^2) corrections; the exact iSWAP forms keep them.

struct TwoLevelEffective {
  double g_eff = 0.0;
  double delta_eff = 0.0;
};

struct ThreeLevelEffective {
  double g1 = 0.0, g2 = 0.0;
  double delta1_eff = 0.0, delta2_eff = 0.0;
};

/// g_eff ~ -g_ab g_bc g_cd g_da / (D1 D2 D3),
/// Delta_eff ~ D4 + g_ab^2/D1 - g_da^2/D3.
TwoLevelEffective iswap_closed_form(const IswapParams& p);

/// Unapproximated forms with denominator D1 D2 D3 - D3 g_bc^2 - D1 g_cd^2.
TwoLevelEffective iswap_exact_form(const IswapParams& p);

/// g_eff ~ -g_ab g_bc g_cd g_de g_ef g_fa / (D1 D2 D3 D4 D5),
/// Delta_eff ~ D6 - g_fa^2/D5.
TwoLevelEffective fredkin2_closed_form(const FredkinParams& p);

/// g1 ~ g_ab g_bc g_cd / (D1 D2), g2 ~ g_de g_ef g_fa / (D4 D5),
/// Delta1_eff ~ D3 + g_ab^2/D1 - g_cd^2/D2 - g_de^2/D4,
/// Delta2_eff ~ D6 - g_fa^2/D5.
ThreeLevelEffective fredkin3_closed_form(const FredkinParams& p);

/// g_eff ~ g_ab g_bc Omega / (2 D1 D2)  (positive-sign convention; the sign
/// only sets the rotation direction), Delta_eff ~ D3 + g_ab^2/D1.
TwoLevelEffective xrot_closed_form(const XRotParams& p);

/// Resonance solving: the free detunings are filled in by direct evaluation
/// of the closed forms so the residual detunings vanish to first order.
/// With `polish`, one Newton step on the numerically measured residuals
/// (finite-difference Jacobian) refines the free detunings.  `residuals`
/// reports the achieved residual detunings from a verification reduction.
struct ResonanceOptions {
  bool polish = false;
};

struct IswapResonance {
  IswapParams params;                 // d4 completed
  Eigen::VectorXd residuals;
};
struct FredkinResonance {
  FredkinParams params;               // d6 (slow) or d3,d6 (fast) completed
  Eigen::VectorXd residuals;
};
struct XRotResonance {
  XRotParams params;                  // d3 completed
  Eigen::VectorXd residuals;
};

IswapResonance solve_iswap_resonance(IswapParams p,
                                     const ResonanceOptions& opt = {});
FredkinResonance solve_fredkin2_resonance(FredkinParams p,
                                          const ResonanceOptions& opt = {});
FredkinResonance solve_fredkin3_resonance(FredkinParams p,
                                          const ResonanceOptions& opt = {});
XRotResonance solve_xrot_resonance(XRotParams p,
                                   const ResonanceOptions& opt = {});

/// Canonical reduction of a preset: enumerate from the reference seed and
/// reduce with P = {atom in a} (plus the d level for the three-state
/// Fredkin).  Returns the model in the derivation's state ordering.
EffectiveModel iswap_effective(const IswapParams& p);
EffectiveModel fredkin2_effective(const FredkinParams& p);
EffectiveModel fredkin3_effective(const FredkinParams& p);
EffectiveModel xrot_effective(const XRotParams& p);

}  // namespace dualrail

#endif  // DUALRAIL_EFFECTIVE_HPP
