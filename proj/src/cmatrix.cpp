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

#include "mpemba/cmatrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace mpemba {

CVector vectorize(const CMatrix& a) {
    // Eigen stores column-major, so this is exactly column stacking.
    return CVector(Eigen::Map<const CVector>(a.data(), a.size()));
}

CMatrix unvectorize(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.size() != rows * cols) {
        throw DimensionMismatch("unvectorize: vector length does not match rows*cols");
    }
    return CMatrix(Eigen::Map<const CMatrix>(v.data(), rows, cols));
}

double schatten_norm(const CMatrix& a, int p) {
    if (!a.allFinite()) {
        throw std::invalid_argument("schatten_norm: non-finite entries");
    }
    if (p == 2) {
        return a.norm();
    }
    Eigen::JacobiSVD<CMatrix> svd(a);
    const auto& sv = svd.singularValues();
    if (p == 1) {
        return sv.sum();
    }
    if (p == p_inf) {
        return sv.size() > 0 ? sv(0) : 0.0;
    }
    throw std::invalid_argument("schatten_norm: p must be 1, 2 or p_inf");
}

bool is_hermitian(const CMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).norm() <= tol * std::max(1.0, a.norm());
}

void check_density_matrix(const CMatrix& rho) {
    if (rho.rows() != rho.cols()) {
        throw InvalidDensityMatrix("density matrix must be square");
    }
    if (!rho.allFinite()) {
        throw InvalidDensityMatrix("density matrix has non-finite entries");
    }
    if ((rho - rho.adjoint()).norm() > 1e-12 * std::max(1.0, rho.norm())) {
        throw InvalidDensityMatrix("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > 1e-12) {
        throw InvalidDensityMatrix("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (rho + rho.adjoint()),
                                              Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw InvalidDensityMatrix("density matrix is not positive semidefinite");
    }
}

CMatrix pure_state_density(const CVector& psi) {
    return psi * psi.adjoint() / psi.squaredNorm();
}

}  // namespace mpemba
