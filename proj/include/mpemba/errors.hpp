// Copyright 2026 The mpemba-lab Authors
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

namespace mpemba {

// Base for all numerical-failure conditions (CLI maps these to exit code 2).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidDensityMatrix : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Eigenvector matrix too ill-conditioned: generator is (close to) defective.
struct NonDiagonalizable : NumericalError {
    using NumericalError::NumericalError;
};

// More than one eigenvalue numerically at zero.
struct DegenerateSteadyState : NumericalError {
    using NumericalError::NumericalError;
};

// Slowest decay mode has a significant imaginary part; the rotated-state
// family is not defined in that case.
struct ComplexSlowMode : NumericalError {
    using NumericalError::NumericalError;
};

// All eigenvalues of the Hermitized slow mode share one sign: no angle with
// a vanishing slow-mode overlap exists.
struct NoSignChange : NumericalError {
    using NumericalError::NumericalError;
};

struct GridMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The two trajectories start at the same distance; roles cannot be assigned.
struct TiedStart : NumericalError {
    using NumericalError::NumericalError;
};

struct DegenerateAtSteadyState : NumericalError {
    using NumericalError::NumericalError;
};

// Purely oscillatory decay mode: no finite lifetime.
struct OscillatoryMode : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace mpemba
