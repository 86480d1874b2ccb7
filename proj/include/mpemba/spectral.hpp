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

#include "mpemba/liouvillian.hpp"

namespace mpemba {

// Full biorthogonal eigendecomposition of a Liouvillian.
//
// Index 0 is the steady state (eigenvalue 0); decay modes 1..N are ordered
// by descending real part (ties broken by descending imaginary part), so
// mode 1 is the slowest and mode N the fastest. Left and right eigenmatrices
// satisfy Tr[L_i^dag R_j] = delta_ij; L_0 is the identity and R_0 the
// unit-trace steady state.
struct Spectrum {
    Eigen::Index dim = 0;
    int n_modes = 0;  // N = d^2 - 1
    CVector eigenvalues;          // size d^2, rad/s
    std::vector<CMatrix> right;   // R_0..R_N
    std::vector<CMatrix> left;    // L_0..L_N
    CMatrix steady_state;         // == right[0]
    double liouvillian_norm = 0;  // Frobenius norm of the generator

    // tau_i = 1/|Re lambda_i| for i in 1..N. Throws OscillatoryMode if some
    // decay mode has vanishing real part.
    std::vector<double> timescales() const;
    double tau(int i) const;
};

Spectrum decompose(const Superoperator& s);

// a_i = Tr[L_i^dag rho_in]; a_0 = 1 for any unit-trace input.
CVector overlaps(const Spectrum& spec, const CMatrix& rho_in);

// Reconstruction sum_i a_i R_i (identity check; also used by tests).
CMatrix reconstruct(const Spectrum& spec, const CVector& a);

}  // namespace mpemba
