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

#ifndef DUALRAIL_DYNAMICS_HPP
#define DUALRAIL_DYNAMICS_HPP

#include <Eigen/Dense>

#include "dualrail/hamiltonian.hpp"
#include "dualrail/types.hpp"

namespace dualrail {

struct StateVector {
  Basis basis;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// Unit state on one basis member.
StateVector basis_state_vector(const Basis& basis, Index i);

/// Exact propagator exp(-i H t) through the Hermitian eigendecomposition,
/// reusable across many times in a sweep.  Throws ValidationError when the
/// input is non-Hermitian beyond tolerance.
class Propagator {
 public:
  explicit Propagator(const OperatorMatrix& h,
                      double hermiticity_tol = 1e-9);

  StateVector apply(const StateVector& psi0, double t) const;

  const Basis& basis() const { return basis_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  Basis basis_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

/// psi(t) = exp(-i h t) psi0.  One-shot convenience over Propagator.
StateVector evolve(const OperatorMatrix& h, const StateVector& psi0, double t);

/// Fixed-step fourth-order integrator, kept as an independent cross-check
/// oracle for the eigendecomposition path.
StateVector evolve_rk4(const OperatorMatrix& h, const StateVector& psi0,
                       double t, double dt);

/// Two-state amplitude map of H_eff = sigma+ sigma- Delta_eff
/// + g_eff (sigma+ + sigma-), with the bookkeeping factor exp(i eta t)
/// applied to the transferred amplitudes.  At Delta_eff = 0 this is
/// |start>   -> cos(g t)|start> - i sin(g t) e^{i eta t}|other>.
Eigen::Matrix2cd two_level_amplitudes(double g_eff, double delta_eff,
                                      double eta, double t);

/// Resonant three-state amplitudes (g' = hypot(g1, g2), gbar = g/g'):
///   stay     = gbar2^2 + gbar1^2 cos(g' t)
///   auxiliary= i gbar1 sin(g' t)
///   transfer = gbar1 gbar2 (cos(g' t) - 1) e^{i eta t}
/// for the state coupled through g1.  The auxiliary amplitude keeps the
/// derivation's sign convention (conjugate of exp(-i H_eff t) with positive
/// couplings); populations are unaffected.  Throws NumericalError when both
/// couplings vanish.
Eigen::Vector3cd three_level_amplitudes(double g1, double g2, double eta,
                                        double t);

struct MeasurementOutcome {
  StateVector projected;          // renormalized; zero vector on failure
  double success_probability = 0.0;
  int target_level = 0;
  bool success = false;
};

/// Project the atom onto `level_index`: amplitudes on other levels are
/// zeroed and the state renormalized.  success_probability is the
/// pre-projection population on the level; below `floor` the outcome is a
/// failure and the operation must be aborted.
MeasurementOutcome project_atom(const StateVector& psi, int level_index,
                                double floor = kDefaultMeasurementFloor);

/// Squared overlap |<target|psi>|^2.  Throws ValidationError on basis
/// mismatch.
double fidelity(const StateVector& psi, const StateVector& target);

/// Overlap magnitude |<target|psi>|; the convention reported at gate level.
double overlap_magnitude(const StateVector& psi, const StateVector& target);

/// <psi| N |psi> with N the total-excitation operator.
double excitation_expectation(const SystemSpec& spec, const StateVector& psi);

}  // namespace dualrail

#endif  // DUALRAIL_DYNAMICS_HPP
