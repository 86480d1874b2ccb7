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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mpemba/ion_model.hpp"
#include "mpemba/spectral.hpp"

using namespace mpemba;

namespace {

Spectrum reference_spectrum(JumpConvention c = JumpConvention::SqrtRate) {
    auto [h, jumps] = build_ion_model(IonParams::reference_defaults(c));
    return decompose(build_liouvillian(h, jumps));
}

double biorthogonality_residual(const Spectrum& spec) {
    double worst = 0;
    for (int i = 0; i <= spec.n_modes; ++i) {
        for (int j = 0; j <= spec.n_modes; ++j) {
            const dcomplex pairing = (spec.left[i].adjoint() * spec.right[j]).trace();
            worst = std::max(worst, std::abs(pairing - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

CMatrix random_density(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = dcomplex(g(rng), g(rng));
    CMatrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("reference model spectrum invariants, both conventions") {
    for (JumpConvention c : {JumpConvention::SqrtRate, JumpConvention::LiteralRate}) {
        const Spectrum spec = reference_spectrum(c);
        CHECK(spec.dim == 3);
        CHECK(spec.n_modes == 8);
        CHECK(spec.eigenvalues(0) == dcomplex(0, 0));
        for (int i = 1; i <= 8; ++i) {
            CHECK(spec.eigenvalues(i).real() <= 1e-10 * spec.liouvillian_norm);
        }
        // Nonincreasing real parts for the decay modes.
        for (int i = 1; i < 8; ++i) {
            CHECK(spec.eigenvalues(i).real() >=
                  spec.eigenvalues(i + 1).real() - 1e-9 * spec.liouvillian_norm);
        }
        CHECK(biorthogonality_residual(spec) < 1e-9);
        CHECK_NOTHROW(check_density_matrix(spec.steady_state));
        CHECK(spec.left[0].isApprox(CMatrix::Identity(3, 3), 1e-9));
    }
}

TEST_CASE("conjugate eigenvalue pairs are adjacent, positive imaginary first") {
    const Spectrum spec = reference_spectrum();
    for (int i = 1; i < 8; ++i) {
        const dcomplex a = spec.eigenvalues(i), b = spec.eigenvalues(i + 1);
        if (std::abs(a.imag()) > 1e-6 * std::abs(a)) {
            if (std::abs(a.real() - b.real()) < 1e-9 * std::abs(a)) {
                CHECK(a.imag() > b.imag());
                CHECK(std::abs(a - std::conj(b)) < 1e-6 * std::abs(a));
            }
        }
    }
}

TEST_CASE("overlaps and reconstruction round-trip") {
    const Spectrum spec = reference_spectrum();
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const CMatrix rho = random_density(3, seed);
        const CVector a = overlaps(spec, rho);
        CHECK(std::abs(a(0) - 1.0) < 1e-10);  // unit trace input
        CHECK((reconstruct(spec, a) - rho).norm() < 1e-9);
    }
}

TEST_CASE("steady state is the t -> infinity limit") {
    const Spectrum spec = reference_spectrum();
    auto [h, jumps] = build_ion_model(IonParams::reference_defaults());
    const Superoperator s = build_liouvillian(h, jumps);
    const CMatrix rho = random_density(3, 9);
    const double t = 20.0 * spec.tau(1);
    CHECK((exp_evolve(s, rho, t) - spec.steady_state).norm() < 1e-6);
    // Steady state is a fixed point of the generator.
    CHECK(apply(s, spec.steady_state).norm() < 1e-9 * spec.liouvillian_norm);
}

TEST_CASE("amplitude-damping qubit decomposition") {
    const double gamma = 1.0e4;
    CMatrix j = CMatrix::Zero(2, 2);
    j(0, 1) = std::sqrt(gamma);
    const Spectrum spec = decompose(build_liouvillian(CMatrix::Zero(2, 2), {j}));
    CHECK(spec.eigenvalues(0) == dcomplex(0, 0));
    CHECK(spec.eigenvalues(1).real() == doctest::Approx(-gamma / 2).epsilon(1e-10));
    CHECK(spec.eigenvalues(2).real() == doctest::Approx(-gamma / 2).epsilon(1e-10));
    CHECK(spec.eigenvalues(3).real() == doctest::Approx(-gamma).epsilon(1e-10));
    CHECK(spec.tau(1) == doctest::Approx(2.0 / gamma).epsilon(1e-12));
    CHECK((spec.steady_state - (CMatrix(2, 2) << 1, 0, 0, 0).finished()).norm() < 1e-10);
    CHECK(biorthogonality_residual(spec) < 1e-9);
}

TEST_CASE("degenerate steady state detected") {
    // Two decoupled jumps with no coupling Hamiltonian on a qutrit leave the
    // |2> population conserved alongside the |0><0| steady state.
    CMatrix j = CMatrix::Zero(3, 3);
    j(0, 1) = 1.0;
    CHECK_THROWS_AS(decompose(build_liouvillian(CMatrix::Zero(3, 3), {j})),
                    DegenerateSteadyState);
}

TEST_CASE("timescales are inverse real parts") {
    const Spectrum spec = reference_spectrum();
    const auto taus = spec.timescales();
    REQUIRE(taus.size() == 8);
    for (int i = 1; i <= 8; ++i) {
        CHECK(taus[i - 1] ==
              doctest::Approx(1.0 / std::abs(spec.eigenvalues(i).real())).epsilon(1e-12));
    }
    // Slowest first.
    CHECK(std::is_sorted(taus.rbegin(), taus.rend()));
}

TEST_CASE("mode gauge is deterministic") {
    const Spectrum a = reference_spectrum();
    const Spectrum b = reference_spectrum();
    for (int i = 0; i <= a.n_modes; ++i) {
        CHECK((a.right[i] - b.right[i]).norm() == 0.0);
        CHECK((a.left[i] - b.left[i]).norm() == 0.0);
    }
}
