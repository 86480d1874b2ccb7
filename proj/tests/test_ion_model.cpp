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

#include <cmath>
#include <numbers>
#include <set>

#include "mpemba/ion_model.hpp"

using namespace mpemba;

namespace {

constexpr double kPi = std::numbers::pi;

Spectrum reference_spectrum() {
    auto [h, jumps] = build_ion_model(IonParams::reference_defaults());
    return decompose(build_liouvillian(h, jumps));
}

// Minimal spectrum carrying a prescribed slow-mode left eigenmatrix, enough
// for state_family_context.
Spectrum synthetic_spectrum(const CMatrix& l1, dcomplex lambda1 = {-1.0, 0.0}) {
    Spectrum spec;
    spec.dim = l1.rows();
    spec.n_modes = static_cast<int>(spec.dim * spec.dim) - 1;
    spec.eigenvalues = CVector::Zero(spec.dim * spec.dim);
    spec.eigenvalues(1) = lambda1;
    spec.left.assign(spec.n_modes + 1, CMatrix::Identity(spec.dim, spec.dim));
    spec.right = spec.left;
    spec.left[1] = l1;
    return spec;
}

}  // namespace

TEST_CASE("reference defaults in rad/s") {
    const IonParams p = IonParams::reference_defaults();
    CHECK(p.omega1 == doctest::Approx(2 * kPi * 20.0e3).epsilon(1e-15));
    CHECK(p.omega2 == doctest::Approx(0.06 * p.omega1).epsilon(1e-15));
    CHECK(p.gamma1 == doctest::Approx(2 * kPi * 40.0e3).epsilon(1e-15));
    CHECK(p.gamma2 == doctest::Approx(2 * kPi * 0.03e3).epsilon(1e-15));
}

TEST_CASE("hamiltonian structure and drive phases") {
    IonParams p = IonParams::reference_defaults();
    p.phi1 = kPi / 2;
    p.phi2 = 0.3;
    auto [h, jumps] = build_ion_model(p);
    CHECK((h - h.adjoint()).norm() < 1e-12 * h.norm());
    CHECK(std::abs(h(0, 1) - 0.5 * p.omega1 * std::exp(ii * p.phi1)) < 1e-9);
    CHECK(std::abs(h(0, 2) - 0.5 * p.omega2 * std::exp(ii * p.phi2)) < 1e-9);
    CHECK(std::abs(h(1, 2)) == 0.0);
    CHECK(std::abs(h(0, 0)) == 0.0);

    REQUIRE(jumps.size() == 2);
    CHECK(std::abs(jumps[0](0, 1) - std::sqrt(p.gamma1)) < 1e-9);
    CHECK(std::abs(jumps[1](0, 2) - std::sqrt(p.gamma2)) < 1e-9);

    p.convention = JumpConvention::LiteralRate;
    auto [h2, jumps2] = build_ion_model(p);
    CHECK(std::abs(jumps2[0](0, 1) - p.gamma1) < 1e-9);
}

TEST_CASE("rotated family basics") {
    Spectrum spec = reference_spectrum();
    const StateFamilyContext ctx = state_family_context(spec);

    CHECK(std::abs(ctx.phi1.norm() - 1.0) < 1e-12);
    CHECK(std::abs(ctx.phi2.norm() - 1.0) < 1e-12);
    CHECK(std::abs(ctx.phi1.dot(ctx.phi2)) < 1e-10);
    CHECK(ctx.alpha1 < 0);
    CHECK(ctx.alpha2 > 0);
    CHECK(ctx.s_star ==
          doctest::Approx(std::atan(std::sqrt(std::abs(ctx.alpha1 / ctx.alpha2))))
              .epsilon(1e-14));

    CHECK((rotated_state(ctx, 0.0) - ctx.phi1).norm() < 1e-12);
    CHECK(std::abs(std::abs(rotated_state(ctx, kPi / 2).dot(ctx.phi2)) - 1.0) < 1e-12);
    for (double s = 0; s < kPi; s += 0.1) {
        CHECK(std::abs(rotated_state(ctx, s).norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("slow-mode overlap identity across the family") {
    Spectrum spec = reference_spectrum();
    const StateFamilyContext ctx = state_family_context(spec);
    for (int k = 0; k < 100; ++k) {
        const double s = kPi * k / 99.0;
        const CVector a = overlaps(spec, pure_state_density(rotated_state(ctx, s)));
        const double predicted = ctx.alpha1 * std::cos(s) * std::cos(s) +
                                 ctx.alpha2 * std::sin(s) * std::sin(s);
        CHECK(std::abs(a(1) - predicted) < 1e-9);
    }
    const CVector a_star =
        overlaps(spec, pure_state_density(rotated_state(ctx, ctx.s_star)));
    CHECK(std::abs(a_star(1)) < 1e-8);
}

TEST_CASE("overlap magnitudes are pi-periodic in s") {
    Spectrum spec = reference_spectrum();
    const StateFamilyContext ctx = state_family_context(spec);
    for (double s : {0.2, 0.9, 1.7, 2.8}) {
        const CVector a = overlaps(spec, pure_state_density(rotated_state(ctx, s)));
        const CVector b = overlaps(spec, pure_state_density(rotated_state(ctx, s + kPi)));
        for (int i = 0; i <= 8; ++i) {
            CHECK(std::abs(std::abs(a(i)) - std::abs(b(i))) < 1e-9);
        }
    }
}

TEST_CASE("strong-ME angle on synthetic slow modes") {
    SUBCASE("eigenvalues (1, -1, 0)") {
        CMatrix l1 = CMatrix::Zero(3, 3);
        l1(0, 0) = 1.0;
        l1(1, 1) = -1.0;
        Spectrum spec = synthetic_spectrum(l1);
        const StateFamilyContext ctx = state_family_context(spec);
        CHECK(ctx.s_star == doctest::Approx(kPi / 4).epsilon(1e-12));
        CHECK(ctx.alpha1 == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(ctx.alpha2 == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("eigenvalues (4, -1, 0.1)") {
        CMatrix l1 = CMatrix::Zero(3, 3);
        l1(0, 0) = 4.0;
        l1(1, 1) = -1.0;
        l1(2, 2) = 0.1;
        Spectrum spec = synthetic_spectrum(l1);
        const StateFamilyContext ctx = state_family_context(spec);
        CHECK(ctx.alpha1 == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(ctx.alpha2 == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(ctx.s_star == doctest::Approx(std::atan(0.5)).epsilon(1e-12));
    }
}

TEST_CASE("family error paths") {
    SUBCASE("complex slow mode") {
        Spectrum spec = synthetic_spectrum(CMatrix::Identity(3, 3), {-1.0, 0.5});
        CHECK_THROWS_AS(state_family_context(spec), ComplexSlowMode);
    }
    SUBCASE("no sign change") {
        CMatrix l1 = CMatrix::Zero(3, 3);
        l1(0, 0) = 2.0;
        l1(1, 1) = 1.0;
        l1(2, 2) = 0.5;
        Spectrum spec = synthetic_spectrum(l1);
        CHECK_THROWS_AS(state_family_context(spec), NoSignChange);
    }
}

TEST_CASE("Haar sampling") {
    SUBCASE("deterministic per seed") {
        const CVector a = sample_haar_pure(3, std::uint64_t{42});
        const CVector b = sample_haar_pure(3, std::uint64_t{42});
        CHECK((a - b).norm() == 0.0);
        CHECK(std::abs(a.norm() - 1.0) < 1e-12);
        CHECK((a - sample_haar_pure(3, std::uint64_t{43})).norm() > 1e-3);
    }
    SUBCASE("first moment of |<0|psi>|^2 is 1/d") {
        std::mt19937_64 rng(7);
        double mean = 0;
        const int n = 100000;
        for (int k = 0; k < n; ++k) {
            mean += std::norm(sample_haar_pure(3, rng)(0));
        }
        mean /= n;
        CHECK(std::abs(mean - 1.0 / 3.0) < 0.01);
    }
    SUBCASE("invariance under a fixed unitary (moment check)") {
        // Rotate by a fixed unitary; the marginal |<0|U psi>|^2 must keep
        // the Haar mean 1/d.
        CMatrix u(3, 3);
        u << 0, 1, 0, 0, 0, ii, 1, 0, 0;
        std::mt19937_64 rng(11);
        double mean = 0;
        const int n = 100000;
        for (int k = 0; k < n; ++k) {
            mean += std::norm((u * sample_haar_pure(3, rng))(0));
        }
        mean /= n;
        CHECK(std::abs(mean - 1.0 / 3.0) < 0.01);
    }
}

TEST_CASE("seed derivation decorrelates tasks") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        seen.insert(derive_seed(12345, t));
    }
    CHECK(seen.size() == 10000);
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}
