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

#include "dualrail/hamiltonian.hpp"

#include <cmath>

namespace dualrail {

namespace {

double diagonal_energy(const SystemSpec& spec, const BasisState& s) {
  double e = spec.diagonal().level_coeffs[s.level];
  e += spec.diagonal().mode_coeffs.dot(s.photons.cast<double>());
  return e;
}

}  // namespace

OperatorMatrix build_hamiltonian(const SystemSpec& spec, const Basis& basis) {
  const Index n = basis.dimension();
  if (n == 0) throw ValidationError("empty basis");
  for (Index i = 0; i < n; ++i) {
    if (basis[i].photons.size() != spec.num_modes() ||
        basis[i].level < 0 || basis[i].level >= spec.num_levels())
      throw ValidationError("basis does not belong to this spec");
  }

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  const double reference = diagonal_energy(spec, basis[0]);
  for (Index i = 0; i < n; ++i)
    h(i, i) = diagonal_energy(spec, basis[i]) - reference;

  for (Index i = 0; i < n; ++i) {
    const BasisState& s = basis[i];
    for (size_t k = 0; k < spec.couplings().size(); ++k) {
      const auto& c = spec.couplings()[k];
      const auto [upper, lower] = spec.coupling_levels(static_cast<Index>(k));
      if (s.level != lower) continue;
      const Complex amp = c.strength * std::exp(Complex(0.0, c.phase));
      if (c.mode == kClassicalMode) {
        BasisState raised{s.photons, upper};
        if (auto j = basis.index_of(raised)) {
          h(*j, i) += amp;
          h(i, *j) += std::conj(amp);
        }
      } else if (s.photons[c.mode] > 0) {
        BasisState raised{s.photons, upper};
        raised.photons[c.mode] -= 1;
        if (auto j = basis.index_of(raised)) {
          const Complex v = amp * std::sqrt(double(s.photons[c.mode]));
          h(*j, i) += v;
          h(i, *j) += std::conj(v);
        }
      }
    }
  }

  if (hermiticity_defect(h) > kHermiticityTol)
    throw ValidationError("built Hamiltonian is not Hermitian");
  return OperatorMatrix{basis, std::move(h)};
}

Eigen::MatrixXcd excitation_operator(const SystemSpec& spec,
                                     const Basis& basis) {
  const Index n = basis.dimension();
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    op(i, i) = double(total_excitation(spec, basis[i]));
  return op;
}

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace dualrail
