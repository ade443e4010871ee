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

#include "dualrail/dynamics.hpp"

#include <cmath>

namespace dualrail {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_same_basis(const Basis& a, const Basis& b, const char* what) {
  if (!(a == b))
    throw ValidationError(std::string("basis mismatch in ") + what);
}

}  // namespace

StateVector basis_state_vector(const Basis& basis, Index i) {
  if (i < 0 || i >= basis.dimension())
    throw ValidationError("basis index out of range");
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(basis.dimension());
  amp[i] = 1.0;
  return StateVector{basis, std::move(amp)};
}

Propagator::Propagator(const OperatorMatrix& h, double hermiticity_tol)
    : basis_(h.basis) {
  if (hermiticity_defect(h.entries) > hermiticity_tol)
    throw ValidationError("propagation needs a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.entries);
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
}

StateVector Propagator::apply(const StateVector& psi0, double t) const {
  require_same_basis(basis_, psi0.basis, "evolve");
  const Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * psi0.amplitudes;
  const Eigen::VectorXcd rotated =
      (Eigen::VectorXcd)((-kI * t * eigenvalues_.array().cast<Complex>()).exp() *
                         coeffs.array());
  return StateVector{basis_, eigenvectors_ * rotated};
}

StateVector evolve(const OperatorMatrix& h, const StateVector& psi0, double t) {
  return Propagator(h).apply(psi0, t);
}

StateVector evolve_rk4(const OperatorMatrix& h, const StateVector& psi0,
                       double t, double dt) {
  require_same_basis(h.basis, psi0.basis, "evolve_rk4");
  if (dt <= 0.0) throw ValidationError("rk4 step must be positive");
  const auto rhs = [&](const Eigen::VectorXcd& psi) -> Eigen::VectorXcd {
    return -kI * (h.entries * psi);
  };
  Eigen::VectorXcd psi = psi0.amplitudes;
  double remaining = t;
  while (remaining > 0.0) {
    const double step = std::min(dt, remaining);
    const Eigen::VectorXcd k1 = rhs(psi);
    const Eigen::VectorXcd k2 = rhs(psi + 0.5 * step * k1);
    const Eigen::VectorXcd k3 = rhs(psi + 0.5 * step * k2);
    const Eigen::VectorXcd k4 = rhs(psi + step * k3);
    psi += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    remaining -= step;
  }
  return StateVector{h.basis, std::move(psi)};
}

Eigen::Matrix2cd two_level_amplitudes(double g_eff, double delta_eff,
                                      double eta, double t) {
  // exp(-i H t) for H = ((0, g), (g, Delta)), then the e^{i eta t} factor on
  // the transferred amplitudes.
  const double omega = std::hypot(2.0 * g_eff, delta_eff);
  Eigen::Matrix2cd u;
  if (omega == 0.0) {
    u.setIdentity();
  } else {
    const double half = 0.5 * omega * t;
    const Complex common = std::exp(-kI * (0.5 * delta_eff * t));
    const Complex c = std::cos(half);
    const Complex s = std::sin(half);
    u(0, 0) = common * (c + kI * (delta_eff / omega) * s);
    u(1, 1) = common * (c - kI * (delta_eff / omega) * s);
    u(0, 1) = u(1, 0) = common * (-kI * (2.0 * g_eff / omega) * s);
  }
  const Complex bookkeeping = std::exp(kI * (eta * t));
  u(0, 1) *= bookkeeping;
  u(1, 0) *= bookkeeping;
  return u;
}

Eigen::Vector3cd three_level_amplitudes(double g1, double g2, double eta,
                                        double t) {
  const double gp = std::hypot(g1, g2);
  if (gp == 0.0)
    throw NumericalError("three-level map needs a nonzero coupling");
  const double gb1 = g1 / gp;
  const double gb2 = g2 / gp;
  const double c = std::cos(gp * t);
  Eigen::Vector3cd amps;
  amps[0] = gb2 * gb2 + gb1 * gb1 * c;
  amps[1] = kI * gb1 * std::sin(gp * t);
  amps[2] = gb1 * gb2 * (c - 1.0) * std::exp(kI * (eta * t));
  return amps;
}

MeasurementOutcome project_atom(const StateVector& psi, int level_index,
                                double floor) {
  MeasurementOutcome outcome;
  outcome.target_level = level_index;
  Eigen::VectorXcd projected = psi.amplitudes;
  for (Index i = 0; i < psi.basis.dimension(); ++i)
    if (psi.basis[i].level != level_index) projected[i] = 0.0;
  const double p = projected.squaredNorm();
  outcome.success_probability = p;
  if (p < floor) {
    outcome.success = false;
    outcome.projected = StateVector{psi.basis, Eigen::VectorXcd::Zero(
                                                   psi.basis.dimension())};
    return outcome;
  }
  outcome.success = true;
  outcome.projected = StateVector{psi.basis, projected / std::sqrt(p)};
  return outcome;
}

double fidelity(const StateVector& psi, const StateVector& target) {
  require_same_basis(psi.basis, target.basis, "fidelity");
  return std::norm(target.amplitudes.dot(psi.amplitudes));
}

double overlap_magnitude(const StateVector& psi, const StateVector& target) {
  require_same_basis(psi.basis, target.basis, "overlap");
  return std::abs(target.amplitudes.dot(psi.amplitudes));
}

double excitation_expectation(const SystemSpec& spec, const StateVector& psi) {
  double n = 0.0;
  for (Index i = 0; i < psi.basis.dimension(); ++i)
    n += std::norm(psi.amplitudes[i]) * total_excitation(spec, psi.basis[i]);
  return n;
}

}  // namespace dualrail
