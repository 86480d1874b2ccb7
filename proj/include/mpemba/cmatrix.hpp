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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mpemba/errors.hpp"

namespace mpemba {

using dcomplex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr dcomplex ii{0.0, 1.0};

// Schatten-infinity selector for the `p` arguments below.
inline constexpr int p_inf = 0;

// Column-stacking vectorization. All Kronecker identities in this codebase
// assume vec(A X B) = (B^T (x) A) vec(X).
CVector vectorize(const CMatrix& a);
CMatrix unvectorize(const CVector& v, Eigen::Index rows, Eigen::Index cols);

// p in {1, 2, p_inf}: trace norm, Hilbert-Schmidt norm, operator norm.
double schatten_norm(const CMatrix& a, int p);

// Throws InvalidDensityMatrix unless rho is Hermitian (1e-12), unit trace
// (1e-12) and PSD (min eigenvalue >= -1e-10).
void check_density_matrix(const CMatrix& rho);

bool is_hermitian(const CMatrix& a, double tol = 1e-12);

CMatrix pure_state_density(const CVector& psi);

}  // namespace mpemba
