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

#ifndef DUALRAIL_HAMILTONIAN_HPP
#define DUALRAIL_HAMILTONIAN_HPP

#include <Eigen/Dense>

#include "dualrail/hilbert.hpp"
#include "dualrail/system.hpp"
#include "dualrail/types.hpp"

namespace dualrail {

/// Dense Hermitian operator over a basis.
struct OperatorMatrix {
  Basis basis;
  Eigen::MatrixXcd entries;

  Index dimension() const { return entries.rows(); }
};

/// Interaction-picture Hamiltonian of `spec` over `basis`.  The diagonal is
/// the spec's linear form re-zeroed on the first basis state (the seed);
/// off-diagonal elements carry strength * exp(i phase) * sqrt(n) ladder
/// factors for cavity couplings and strength * exp(i phase) for classical
/// drives.  Hermitian by construction.
OperatorMatrix build_hamiltonian(const SystemSpec& spec, const Basis& basis);

/// Diagonal matrix of total_excitation over the basis.
Eigen::MatrixXcd excitation_operator(const SystemSpec& spec, const Basis& basis);

/// Largest |H - H^dag| entry.
double hermiticity_defect(const Eigen::MatrixXcd& m);

/// Per-transition detunings delta_i -> cumulative detunings Delta_j
/// (alternating cumulative sum, Delta_j = sum_{i<=j} (-1)^{i+1} delta_i).
template <typename Derived>
VectorR<typename Derived::Scalar> cumulative_detunings(
    const Eigen::MatrixBase<Derived>& small) {
  using Real = typename Derived::Scalar;
  VectorR<Real> big(small.size());
  Real acc{};
  for (Index i = 0; i < small.size(); ++i) {
    acc += (i % 2 == 0) ? small[i] : -small[i];
    big[i] = acc;
  }
  return big;
}

/// Exact inverse of cumulative_detunings:
/// delta_1 = Delta_1, delta_j = (-1)^{j+1} (Delta_j - Delta_{j-1}).
template <typename Derived>
VectorR<typename Derived::Scalar> stepwise_detunings(
    const Eigen::MatrixBase<Derived>& big) {
  using Real = typename Derived::Scalar;
  VectorR<Real> small(big.size());
  for (Index i = 0; i < big.size(); ++i) {
    const Real diff = (i == 0) ? big[0] : Real(big[i] - big[i - 1]);
    small[i] = (i % 2 == 0) ? diff : -diff;
  }
  return small;
}

}  // namespace dualrail

#endif  // DUALRAIL_HAMILTONIAN_HPP
