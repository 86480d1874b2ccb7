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

#include "mpemba/ion_model.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace mpemba {

IonParams IonParams::reference_defaults(JumpConvention c) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    IonParams p;
    p.omega1 = two_pi * 20.0e3;
    p.omega2 = 0.06 * p.omega1;
    p.gamma1 = two_pi * 40.0e3;
    p.gamma2 = two_pi * 0.03e3;
    p.convention = c;
    return p;
}

std::pair<CMatrix, std::vector<CMatrix>> build_ion_model(const IonParams& p) {
    if (p.omega1 < 0 || p.omega2 < 0 || p.gamma1 < 0 || p.gamma2 < 0) {
        throw std::invalid_argument("build_ion_model: negative rate or Rabi frequency");
    }
    CMatrix h = CMatrix::Zero(3, 3);
    h(0, 1) = 0.5 * p.omega1 * std::exp(ii * p.phi1);
    h(1, 0) = std::conj(h(0, 1));
    h(0, 2) = 0.5 * p.omega2 * std::exp(ii * p.phi2);
    h(2, 0) = std::conj(h(0, 2));

    const double c1 = (p.convention == JumpConvention::SqrtRate) ? std::sqrt(p.gamma1) : p.gamma1;
    const double c2 = (p.convention == JumpConvention::SqrtRate) ? std::sqrt(p.gamma2) : p.gamma2;
    std::vector<CMatrix> jumps;
    CMatrix j1 = CMatrix::Zero(3, 3);
    j1(0, 1) = c1;
    CMatrix j2 = CMatrix::Zero(3, 3);
    j2(0, 2) = c2;
    jumps.push_back(std::move(j1));
    jumps.push_back(std::move(j2));
    return {std::move(h), std::move(jumps)};
}

StateFamilyContext state_family_context(Spectrum& spec) {
    const dcomplex lambda1 = spec.eigenvalues(1);
    if (std::abs(lambda1.imag()) > 1e-8 * std::abs(lambda1)) {
        throw ComplexSlowMode("state_family_context: lambda_1 has significant imaginary part");
    }

    CMatrix l1 = spec.left[1];
    const double l1_norm = l1.norm();
    if (l1_norm == 0.0) {
        throw NumericalError("state_family_context: vanishing L_1");
    }
    // Phase maximizing ||e^{i theta} L_1 + h.c.||: theta = -arg Tr[L_1^2]/2.
    const dcomplex tr_sq = (l1 * l1).trace();
    dcomplex phase{1.0, 0.0};
    if (std::abs(tr_sq) > 1e-14 * l1_norm * l1_norm) {
        phase = std::exp(-0.5 * ii * std::arg(tr_sq));
    }
    CMatrix rotated = phase * l1;
    if ((rotated - rotated.adjoint()).norm() > 1e-6 * l1_norm) {
        throw NumericalError("state_family_context: L_1 is not Hermitizable");
    }
    CMatrix herm = 0.5 * (rotated + rotated.adjoint());

    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
    Eigen::Vector3d evals = es.eigenvalues();
    // Sort by descending magnitude.
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return std::abs(evals(a)) > std::abs(evals(b)); });

    int i1 = idx[0], i2 = -1;
    for (int k = 1; k < 3; ++k) {
        if (evals(idx[k]) * evals(i1) < 0) {
            i2 = idx[k];
            break;
        }
    }
    if (i2 < 0) {
        throw NoSignChange("state_family_context: no opposite-sign eigenvalue pair in L_1");
    }

    // Gauge convention: largest-magnitude eigenvalue positive. The phase and
    // sign are pushed into the spectrum (L_1 and R_1 jointly), so overlap
    // formulas downstream see the Hermitian, sign-fixed L_1.
    if (evals(i1) < 0) {
        phase = -phase;
        evals = -evals;
    }
    spec.left[1] = phase * spec.left[1];
    spec.right[1] = phase * spec.right[1];

    // phi_1 carries the negative eigenvalue, phi_2 the positive one (after
    // the gauge above, the positive one has the larger magnitude). This
    // orientation makes the fast-mode content of |s> grow toward s = 0, pi,
    // which is the parameterization the relaxation figures follow.
    const int neg = evals(i1) < 0 ? i1 : i2;
    const int pos = neg == i1 ? i2 : i1;

    StateFamilyContext ctx;
    ctx.phi1 = es.eigenvectors().col(neg);
    ctx.phi2 = es.eigenvectors().col(pos);
    // Deterministic eigenvector gauge: largest-magnitude entry real positive.
    for (CVector* v : {&ctx.phi1, &ctx.phi2}) {
        Eigen::Index imax;
        v->cwiseAbs().maxCoeff(&imax);
        *v *= std::exp(-ii * std::arg((*v)(imax)));
    }
    ctx.alpha1 = evals(neg);
    ctx.alpha2 = evals(pos);
    ctx.s_star = std::atan(std::sqrt(std::abs(ctx.alpha1 / ctx.alpha2)));
    ctx.l1_phase = phase;
    return ctx;
}

CVector rotated_state(const StateFamilyContext& ctx, double s) {
    return std::cos(s) * ctx.phi1 - ii * std::sin(s) * ctx.phi2;
}

CVector sample_haar_pure(int dim, std::mt19937_64& rng) {
    if (dim < 2) {
        throw std::invalid_argument("sample_haar_pure: dimension must be >= 2");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector psi(dim);
    for (int i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        psi(i) = dcomplex(re, im);
    }
    psi.normalize();
    return psi;
}

CVector sample_haar_pure(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_haar_pure(dim, rng);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t task_index) {
    // splitmix64 finalizer over the mixed pair
    std::uint64_t z = base ^ (0x9e3779b97f4a7c15ULL * (task_index + 1));
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace mpemba
