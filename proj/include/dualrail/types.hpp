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

#ifndef DUALRAIL_TYPES_HPP
#define DUALRAIL_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace dualrail {

template <typename Real>
using ComplexT = std::complex<Real>;

template <typename Real>
using MatrixC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using VectorC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using Index = Eigen::Index;

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kDefaultConditionBound = 1e12;
inline constexpr double kDefaultMeasurementFloor = 1e-12;
inline constexpr Index kDefaultMaxDimension = 4096;

// All energies are in units of a reference coupling g, times in units of 1/g.
// Conversion to SI happens only at the CLI layer.

}  // namespace dualrail

#endif  // DUALRAIL_TYPES_HPP
