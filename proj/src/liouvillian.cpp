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

#include "mpemba/liouvillian.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "mpemba/expm.hpp"

namespace mpemba {

Superoperator build_liouvillian(const CMatrix& hamiltonian, const std::vector<CMatrix>& jumps) {
    const Eigen::Index d = hamiltonian.rows();
    if (hamiltonian.cols() != d) {
        throw DimensionMismatch("build_liouvillian: H must be square");
    }
    if (!is_hermitian(hamiltonian)) {
        throw std::invalid_argument("build_liouvillian: H is not Hermitian");
    }
    const CMatrix id = CMatrix::Identity(d, d);

    CMatrix l = -ii * (Eigen::kroneckerProduct(id, hamiltonian).eval() -
                       Eigen::kroneckerProduct(hamiltonian.transpose(), id).eval());
    for (const CMatrix& j : jumps) {
        if (j.rows() != d || j.cols() != d) {
            throw DimensionMismatch("build_liouvillian: jump operator dimension mismatch");
        }
        const CMatrix jdj = j.adjoint() * j;
        l += Eigen::kroneckerProduct(j.conjugate(), j).eval();
        l -= 0.5 * Eigen::kroneckerProduct(id, jdj).eval();
        l -= 0.5 * Eigen::kroneckerProduct(jdj.transpose(), id).eval();
    }
    return Superoperator{d, std::move(l)};
}

double trace_preservation_residual(const Superoperator& s) {
    // Tr unvec(S v) for every column of S is vec(I)^dag S.
    const CVector trace_functional = vectorize(CMatrix::Identity(s.dim, s.dim));
    return (trace_functional.adjoint() * s.matrix).cwiseAbs().maxCoeff();
}

CMatrix apply(const Superoperator& s, const CMatrix& rho) {
    if (rho.rows() != s.dim || rho.cols() != s.dim) {
        throw DimensionMismatch("apply: state dimension mismatch");
    }
    return unvectorize(s.matrix * vectorize(rho), s.dim, s.dim);
}

CMatrix exp_evolve(const Superoperator& s, const CMatrix& rho_in, double t) {
    if (t < 0) {
        throw std::invalid_argument("exp_evolve: t must be nonnegative");
    }
    check_density_matrix(rho_in);
    if (rho_in.rows() != s.dim) {
        throw DimensionMismatch("exp_evolve: state dimension mismatch");
    }
    if (t == 0.0) return rho_in;
    return unvectorize(expm(s.matrix * t) * vectorize(rho_in), s.dim, s.dim);
}

}  // namespace mpemba
