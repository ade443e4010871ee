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

#include "dualrail/effective.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace dualrail {

namespace {

void require_nonzero(std::initializer_list<double> values, const char* what) {
  for (double v : values)
    if (v == 0.0) throw NumericalError(std::string("degenerate detuning: ") + what);
}

}  // namespace

Partition partition_by_levels(const SystemSpec& spec, const Basis& basis,
                              std::span<const std::string> resonant_levels) {
  std::set<int> resonant;
  for (const auto& name : resonant_levels)
    resonant.insert(spec.level_index(name));
  Partition part;
  for (Index i = 0; i < basis.dimension(); ++i) {
    if (resonant.count(basis[i].level))
      part.p.push_back(i);
    else
      part.q.push_back(i);
  }
  return part;
}

EffectiveModel schur_reduce(const OperatorMatrix& h, const Partition& partition,
                            double condition_bound) {
  const Index n = h.dimension();
  std::vector<bool> covered(static_cast<size_t>(n), false);
  for (Index i : partition.p) {
    if (i < 0 || i >= n || covered[static_cast<size_t>(i)])
      throw ValidationError("partition is not a disjoint cover of the basis");
    covered[static_cast<size_t>(i)] = true;
  }
  for (Index i : partition.q) {
    if (i < 0 || i >= n || covered[static_cast<size_t>(i)])
      throw ValidationError("partition is not a disjoint cover of the basis");
    covered[static_cast<size_t>(i)] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw ValidationError("partition does not cover the basis");
  if (partition.p.empty())
    throw ValidationError("partition needs at least one near-resonant state");

  const Index np = static_cast<Index>(partition.p.size());
  const Index nq = static_cast<Index>(partition.q.size());

  Eigen::MatrixXcd h0(np, np), b(np, nq), a(nq, nq);
  for (Index r = 0; r < np; ++r)
    for (Index c = 0; c < np; ++c)
      h0(r, c) = h.entries(partition.p[static_cast<size_t>(r)],
                           partition.p[static_cast<size_t>(c)]);
  for (Index r = 0; r < np; ++r)
    for (Index c = 0; c < nq; ++c)
      b(r, c) = h.entries(partition.p[static_cast<size_t>(r)],
                          partition.q[static_cast<size_t>(c)]);
  for (Index r = 0; r < nq; ++r)
    for (Index c = 0; c < nq; ++c)
      a(r, c) = h.entries(partition.q[static_cast<size_t>(r)],
                          partition.q[static_cast<size_t>(c)]);

  EffectiveModel model;
  if (nq == 0) {
    model.h_eff = h0;
    model.condition = 1.0;
  } else {
    // A is a Hermitian submatrix; its spectrum gives the conditioning.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a,
                                                       Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().cwiseAbs().minCoeff();
    const double hi = es.eigenvalues().cwiseAbs().maxCoeff();
    if (lo == 0.0 || hi / lo > condition_bound)
      throw NumericalError(
          "ill-conditioned Q partition (a near-resonant state may be "
          "assigned to Q)");
    model.condition = hi / lo;
    const Eigen::MatrixXcd x = a.partialPivLu().solve(b.adjoint());
    model.h_eff = h0 - b * x;
  }

  model.max_asymmetry =
      (model.h_eff - model.h_eff.adjoint()).cwiseAbs().maxCoeff();
  model.h_eff = 0.5 * (model.h_eff + model.h_eff.adjoint()).eval();
  model.shifts = (model.h_eff - h0).diagonal().real();
  model.residual_detunings =
      model.h_eff.diagonal().real().array() - model.h_eff(0, 0).real();
  return model;
}

TwoLevelEffective iswap_closed_form(const IswapParams& p) {
  require_nonzero({p.d1, p.d2, p.d3}, "iswap needs D1, D2, D3 != 0");
  return {-p.g_ab * p.g_bc * p.g_cd * p.g_da / (p.d1 * p.d2 * p.d3),
          p.d4 + p.g_ab * p.g_ab / p.d1 - p.g_da * p.g_da / p.d3};
}

TwoLevelEffective iswap_exact_form(const IswapParams& p) {
  const double det = p.d1 * p.d2 * p.d3 - p.d3 * p.g_bc * p.g_bc -
                     p.d1 * p.g_cd * p.g_cd;
  require_nonzero({det}, "iswap exact-form denominator vanishes");
  const double num = p.g_ab * p.g_ab * (p.d2 * p.d3 - p.g_cd * p.g_cd) -
                     p.g_da * p.g_da * (p.d1 * p.d2 - p.g_bc * p.g_bc);
  return {-p.g_ab * p.g_bc * p.g_cd * p.g_da / det, p.d4 + num / det};
}

TwoLevelEffective fredkin2_closed_form(const FredkinParams& p) {
  require_nonzero({p.d1, p.d2, p.d3, p.d4, p.d5},
                  "fredkin needs D1..D5 != 0");
  return {-p.g_ab * p.g_bc * p.g_cd * p.g_de * p.g_ef * p.g_fa /
              (p.d1 * p.d2 * p.d3 * p.d4 * p.d5),
          p.d6 - p.g_fa * p.g_fa / p.d5};
}

ThreeLevelEffective fredkin3_closed_form(const FredkinParams& p) {
  require_nonzero({p.d1, p.d2, p.d4, p.d5}, "fredkin needs D1, D2, D4, D5 != 0");
  ThreeLevelEffective eff;
  eff.g1 = p.g_ab * p.g_bc * p.g_cd / (p.d1 * p.d2);
  eff.g2 = p.g_de * p.g_ef * p.g_fa / (p.d4 * p.d5);
  eff.delta1_eff = p.d3 + p.g_ab * p.g_ab / p.d1 - p.g_cd * p.g_cd / p.d2 -
                   p.g_de * p.g_de / p.d4;
  eff.delta2_eff = p.d6 - p.g_fa * p.g_fa / p.d5;
  return eff;
}

TwoLevelEffective xrot_closed_form(const XRotParams& p) {
  require_nonzero({p.d1, p.d2}, "x rotation needs D1, D2 != 0");
  return {p.g_ab * p.g_bc * p.omega / (2.0 * p.d1 * p.d2),
          p.d3 + p.g_ab * p.g_ab / p.d1};
}

namespace {

const std::string kLevelA[] = {std::string("a")};
const std::string kLevelsAD[] = {std::string("a"), std::string("d")};

EffectiveModel reduce_preset(const SystemSpec& spec, const BasisState& seed,
                             std::span<const std::string> resonant) {
  const Basis basis = enumerate_basis(spec, seed);
  const OperatorMatrix h = build_hamiltonian(spec, basis);
  return schur_reduce(h, partition_by_levels(spec, basis, resonant));
}

// One Newton step on the numerically measured residual detunings of the free
// detunings, with a forward-difference Jacobian.
void newton_polish(std::function<Eigen::VectorXd(const Eigen::VectorXd&)> residual,
                   Eigen::VectorXd& free_detunings) {
  const Eigen::VectorXd r0 = residual(free_detunings);
  const Index k = free_detunings.size();
  Eigen::MatrixXd jac(r0.size(), k);
  for (Index j = 0; j < k; ++j) {
    const double h = 1e-6 * std::max(1.0, std::abs(free_detunings[j]));
    Eigen::VectorXd bumped = free_detunings;
    bumped[j] += h;
    jac.col(j) = (residual(bumped) - r0) / h;
  }
  free_detunings -= jac.partialPivLu().solve(r0);
}

}  // namespace

EffectiveModel iswap_effective(const IswapParams& p) {
  return reduce_preset(make_iswap_spec(p), iswap_reference_seed(), kLevelA);
}

EffectiveModel fredkin2_effective(const FredkinParams& p) {
  return reduce_preset(make_fredkin_spec(p), fredkin_reference_seed(), kLevelA);
}

EffectiveModel fredkin3_effective(const FredkinParams& p) {
  return reduce_preset(make_fredkin_spec(p), fredkin_reference_seed(),
                       kLevelsAD);
}

EffectiveModel xrot_effective(const XRotParams& p) {
  return reduce_preset(make_xrot_spec(p), xrot_reference_seed(), kLevelA);
}

IswapResonance solve_iswap_resonance(IswapParams p,
                                     const ResonanceOptions& opt) {
  require_nonzero({p.d1, p.d3}, "resonance needs D1, D3 != 0");
  p.d4 = p.g_da * p.g_da / p.d3 - p.g_ab * p.g_ab / p.d1;
  if (opt.polish) {
    Eigen::VectorXd x(1);
    x[0] = p.d4;
    newton_polish(
        [&](const Eigen::VectorXd& v) {
          IswapParams q = p;
          q.d4 = v[0];
          return Eigen::VectorXd(
              iswap_effective(q).residual_detunings.tail(1));
        },
        x);
    p.d4 = x[0];
  }
  return {p, iswap_effective(p).residual_detunings};
}

FredkinResonance solve_fredkin2_resonance(FredkinParams p,
                                          const ResonanceOptions& opt) {
  require_nonzero({p.d5}, "resonance needs D5 != 0");
  p.d6 = p.g_fa * p.g_fa / p.d5;
  if (opt.polish) {
    Eigen::VectorXd x(1);
    x[0] = p.d6;
    newton_polish(
        [&](const Eigen::VectorXd& v) {
          FredkinParams q = p;
          q.d6 = v[0];
          return Eigen::VectorXd(
              fredkin2_effective(q).residual_detunings.tail(1));
        },
        x);
    p.d6 = x[0];
  }
  return {p, fredkin2_effective(p).residual_detunings};
}

FredkinResonance solve_fredkin3_resonance(FredkinParams p,
                                          const ResonanceOptions& opt) {
  require_nonzero({p.d1, p.d2, p.d4, p.d5}, "resonance needs D1, D2, D4, D5 != 0");
  p.d3 = p.g_cd * p.g_cd / p.d2 + p.g_de * p.g_de / p.d4 -
         p.g_ab * p.g_ab / p.d1;
  p.d6 = p.g_fa * p.g_fa / p.d5;
  if (opt.polish) {
    Eigen::VectorXd x(2);
    x << p.d3, p.d6;
    newton_polish(
        [&](const Eigen::VectorXd& v) {
          FredkinParams q = p;
          q.d3 = v[0];
          q.d6 = v[1];
          return Eigen::VectorXd(
              fredkin3_effective(q).residual_detunings.tail(2));
        },
        x);
    p.d3 = x[0];
    p.d6 = x[1];
  }
  return {p, fredkin3_effective(p).residual_detunings};
}

XRotResonance solve_xrot_resonance(XRotParams p, const ResonanceOptions& opt) {
  require_nonzero({p.d1}, "resonance needs D1 != 0");
  p.d3 = -p.g_ab * p.g_ab / p.d1;
  if (opt.polish) {
    Eigen::VectorXd x(1);
    x[0] = p.d3;
    newton_polish(
        [&](const Eigen::VectorXd& v) {
          XRotParams q = p;
          q.d3 = v[0];
          return Eigen::VectorXd(
              xrot_effective(q).residual_detunings.tail(1));
        },
        x);
    p.d3 = x[0];
  }
  return {p, xrot_effective(p).residual_detunings};
}

}  // namespace dualrail
