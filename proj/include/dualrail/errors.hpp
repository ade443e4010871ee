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

#ifndef DUALRAIL_ERRORS_HPP
#define DUALRAIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dualrail {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or incomplete run configuration (bad field, unknown gate id,
// missing parameter).  CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Contract violation on otherwise well-formed inputs: cutoff exceeded,
// basis/operator mismatch, unknown level, arity mismatch, dimension cap.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: ill-conditioned Q partition, degenerate (zero)
// detunings or couplings.  CLI exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dualrail

#endif  // DUALRAIL_ERRORS_HPP
