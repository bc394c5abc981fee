// Copyright 2026 The Landauer Collision Model Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace landauer {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix dimension above the supported cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was not met (bad label, out-of-range strength,
/// non-Hermitian input, dimension mismatch, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Iterative numerics failed to converge or produced non-finite values.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A spectral function is undefined at a retained eigenvalue.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Matrix does not describe a valid density operator.
class StateError : public Error {
 public:
  using Error::Error;
};

/// Relative entropy requested against a rank-deficient reference state.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// Single-qubit state cannot be written as a Gibbs state of its Hamiltonian.
class ThermalFormError : public Error {
 public:
  using Error::Error;
};

}  // namespace landauer
