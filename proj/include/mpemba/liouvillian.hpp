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

#include <vector>

#include "mpemba/cmatrix.hpp"

namespace mpemba {

// Lindblad generator as a d^2 x d^2 matrix acting on column-stacked density
// matrices. All rates are angular frequencies (rad/s).
struct Superoperator {
    Eigen::Index dim = 0;  // Hilbert-space dimension d
    CMatrix matrix;        // d^2 x d^2

    // Frobenius norm, used as the scale for spectral tolerances.
    double norm() const { return matrix.norm(); }
};

// matrix = -i (I(x)H - H^T(x)I)
//          + sum_a [ conj(J_a)(x)J_a - 1/2 I(x)(J_a^dag J_a) - 1/2 (J_a^dag J_a)^T(x)I ]
Superoperator build_liouvillian(const CMatrix& hamiltonian, const std::vector<CMatrix>& jumps);

// Trace-preservation residual: max over basis matrices E of |Tr unvec(S vec(E))|.
double trace_preservation_residual(const Superoperator& s);

// rho_t = unvec(exp(S t) vec(rho_in)). Independent of the mode-expansion
// path; used as the evolution oracle.
CMatrix exp_evolve(const Superoperator& s, const CMatrix& rho_in, double t);

CMatrix apply(const Superoperator& s, const CMatrix& rho);

}  // namespace mpemba
