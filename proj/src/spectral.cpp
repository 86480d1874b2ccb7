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

#include "mpemba/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mpemba {

namespace {

// Deterministic gauge: rotate the mode so its largest entry is real positive,
// and normalize the right eigenmatrix to unit Hilbert-Schmidt norm.
void fix_mode_gauge(CMatrix& r, CMatrix& l) {
    Eigen::Index imax = 0, jmax = 0;
    r.cwiseAbs().maxCoeff(&imax, &jmax);
    const dcomplex pivot = r(imax, jmax);
    const double scale = r.norm();
    if (std::abs(pivot) == 0.0 || scale == 0.0) return;
    const dcomplex phase = pivot / std::abs(pivot);
    r *= std::conj(phase) / scale;
    l *= std::conj(phase) * scale;  // keeps Tr[L^dag R] = 1
}

}  // namespace

Spectrum decompose(const Superoperator& s) {
    const Eigen::Index d = s.dim;
    const Eigen::Index n2 = d * d;
    if (s.matrix.rows() != n2 || s.matrix.cols() != n2) {
        throw DimensionMismatch("decompose: superoperator shape mismatch");
    }
    const double snorm = s.matrix.norm();
    if (trace_preservation_residual(s) > 1e-9 * std::max(1.0, snorm)) {
        throw std::invalid_argument("decompose: superoperator is not trace-preserving");
    }

    Eigen::ComplexEigenSolver<CMatrix> es(s.matrix);
    if (es.info() != Eigen::Success) {
        throw NonDiagonalizable("decompose: eigensolver failed to converge");
    }
    const CMatrix& v = es.eigenvectors();
    const CVector& vals = es.eigenvalues();

    {
        Eigen::JacobiSVD<CMatrix> svd(v);
        const auto& sv = svd.singularValues();
        const double cond = sv(0) / sv(sv.size() - 1);
        if (!std::isfinite(cond) || cond > 1e8) {
            throw NonDiagonalizable("decompose: eigenvector condition number " +
                                    std::to_string(cond) + " exceeds 1e8");
        }
    }
    // Rows of V^-1 are the matching left row-eigenvectors; biorthogonality
    // Tr[L_i^dag R_j] = (V^-1 V)_ij = delta_ij holds by construction, also
    // inside degenerate eigenvalue clusters.
    const CMatrix w = v.partialPivLu().inverse();

    const double zero_tol = 1e-10 * std::max(1.0, snorm);
    std::vector<Eigen::Index> zero_idx;
    for (Eigen::Index i = 0; i < n2; ++i) {
        if (std::abs(vals(i)) <= zero_tol) zero_idx.push_back(i);
    }
    if (zero_idx.size() != 1) {
        throw DegenerateSteadyState("decompose: found " + std::to_string(zero_idx.size()) +
                                    " eigenvalues at zero");
    }
    for (Eigen::Index i = 0; i < n2; ++i) {
        if (vals(i).real() > zero_tol) {
            throw NumericalError("decompose: eigenvalue with positive real part");
        }
    }

    std::vector<Eigen::Index> order(n2);
    std::iota(order.begin(), order.end(), 0);
    const Eigen::Index steady = zero_idx[0];
    const double tie_tol = 1e-10 * std::max(1.0, vals.cwiseAbs().maxCoeff());
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (a == steady) return true;
        if (b == steady) return false;
        const dcomplex la = vals(a), lb = vals(b);
        if (std::abs(la.real() - lb.real()) > tie_tol) return la.real() > lb.real();
        return la.imag() > lb.imag();
    });

    Spectrum spec;
    spec.dim = d;
    spec.n_modes = static_cast<int>(n2 - 1);
    spec.liouvillian_norm = snorm;
    spec.eigenvalues.resize(n2);
    spec.right.resize(n2);
    spec.left.resize(n2);

    for (Eigen::Index k = 0; k < n2; ++k) {
        const Eigen::Index i = order[k];
        spec.eigenvalues(k) = (k == 0) ? dcomplex(0.0, 0.0) : vals(i);
        CMatrix r = unvectorize(v.col(i), d, d);
        CMatrix l = unvectorize(w.row(i).adjoint(), d, d);
        if (k == 0) {
            const dcomplex tr = r.trace();
            if (std::abs(tr) < 1e-12) {
                throw DegenerateSteadyState("decompose: traceless null eigenmatrix");
            }
            r /= tr;
            l *= std::conj(tr);
        } else {
            fix_mode_gauge(r, l);
        }
        spec.right[k] = std::move(r);
        spec.left[k] = std::move(l);
    }
    spec.steady_state = spec.right[0];
    return spec;
}

std::vector<double> Spectrum::timescales() const {
    std::vector<double> taus;
    taus.reserve(n_modes);
    for (int i = 1; i <= n_modes; ++i) {
        const double re = eigenvalues(i).real();
        if (re == 0.0) {
            throw OscillatoryMode("timescales: mode " + std::to_string(i) +
                                  " has zero real part");
        }
        taus.push_back(1.0 / std::abs(re));
    }
    return taus;
}

double Spectrum::tau(int i) const {
    if (i < 1 || i > n_modes) {
        throw std::out_of_range("tau: mode index out of range");
    }
    const double re = eigenvalues(i).real();
    if (re == 0.0) {
        throw OscillatoryMode("tau: mode " + std::to_string(i) + " has zero real part");
    }
    return 1.0 / std::abs(re);
}

CVector overlaps(const Spectrum& spec, const CMatrix& rho_in) {
    if (rho_in.rows() != spec.dim || rho_in.cols() != spec.dim) {
        throw DimensionMismatch("overlaps: state dimension mismatch");
    }
    CVector a(spec.n_modes + 1);
    for (int i = 0; i <= spec.n_modes; ++i) {
        a(i) = (spec.left[i].adjoint() * rho_in).trace();
    }
    return a;
}

CMatrix reconstruct(const Spectrum& spec, const CVector& a) {
    CMatrix rho = CMatrix::Zero(spec.dim, spec.dim);
    for (int i = 0; i <= spec.n_modes; ++i) {
        rho += a(i) * spec.right[i];
    }
    return rho;
}

}  // namespace mpemba
