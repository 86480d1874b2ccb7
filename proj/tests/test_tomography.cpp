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
#include <random>

#include "mpemba/tomography.hpp"

using namespace mpemba;

namespace {

CMatrix random_mixed(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = dcomplex(g(rng), g(rng));
    CMatrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("standard setup geometry") {
    const TomographySetup setup = TomographySetup::standard();
    REQUIRE(setup.settings.size() == 9);
    for (std::size_t s = 0; s < 9; ++s) {
        const Matrix3& w = setup.settings[s];
        CHECK((w * w.adjoint() - Matrix3::Identity()).norm() < 1e-14);
        const auto proj = setup.projectors(s);
        Matrix3 sum = Matrix3::Zero();
        for (const Matrix3& p : proj) {
            CHECK((p * p - p).norm() < 1e-13);  // projectors
            sum += p;
        }
        CHECK((sum - Matrix3::Identity()).norm() < 1e-13);
    }
}

TEST_CASE("exact simulation returns Born probabilities") {
    const TomographySetup setup = TomographySetup::standard();
    const CMatrix rho = random_mixed(3);
    const CountsTable counts = simulate_tomography(rho, setup, 0);
    CHECK(counts.exact());
    REQUIRE(counts.counts.size() == 9);
    for (std::size_t s = 0; s < 9; ++s) {
        const auto proj = setup.projectors(s);
        for (int j = 0; j < 3; ++j) {
            const double p = (proj[j] * rho).trace().real();
            CHECK(counts.counts[s][j] == doctest::Approx(p).epsilon(1e-12));
        }
    }
}

TEST_CASE("finite-shot simulation") {
    const TomographySetup setup = TomographySetup::standard();
    const CMatrix rho = random_mixed(5);
    const CountsTable a = simulate_tomography(rho, setup, 2000, 42);
    const CountsTable b = simulate_tomography(rho, setup, 2000, 42);
    const CountsTable c = simulate_tomography(rho, setup, 2000, 43);
    CHECK_FALSE(a.exact());
    bool differs = false;
    for (std::size_t s = 0; s < 9; ++s) {
        CHECK(a.counts[s][0] + a.counts[s][1] + a.counts[s][2] == 2000);
        for (int j = 0; j < 3; ++j) {
            CHECK(a.counts[s][j] == b.counts[s][j]);  // seeded determinism
            differs |= a.counts[s][j] != c.counts[s][j];
        }
    }
    CHECK(differs);
}

TEST_CASE("mle reconstructs from exact probabilities") {
    const TomographySetup setup = TomographySetup::standard();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const CMatrix rho = random_mixed(seed);
        const MleResult r = mle_reconstruct(simulate_tomography(rho, setup, 0), setup);
        CHECK(fidelity(r.rho, rho) >= 0.9999);
        CHECK_NOTHROW(check_density_matrix(r.rho));
        for (std::size_t k = 1; k < r.loglik_trace.size(); ++k) {
            CHECK(r.loglik_trace[k] >= r.loglik_trace[k - 1] - 1e-9);
        }
    }
}

TEST_CASE("mle on finite statistics") {
    const TomographySetup setup = TomographySetup::standard();
    const CMatrix rho = random_mixed(9);
    const MleResult r =
        mle_reconstruct(simulate_tomography(rho, setup, 20000, 4), setup);
    CHECK(fidelity(r.rho, rho) >= 0.95);
}

TEST_CASE("mle input validation") {
    const TomographySetup setup = TomographySetup::standard();
    CountsTable empty;
    CHECK_THROWS_AS(mle_reconstruct(empty, setup), std::invalid_argument);
    CountsTable zeros;
    zeros.counts.assign(9, {0.0, 0.0, 0.0});
    zeros.shots_per_setting = 100;
    CHECK_THROWS_AS(mle_reconstruct(zeros, setup), std::invalid_argument);
}

TEST_CASE("bootstrap error bars") {
    const TomographySetup setup = TomographySetup::standard();
    const CMatrix rho = random_mixed(15);
    const CountsTable counts = simulate_tomography(rho, setup, 500, 8);
    const ErrorBars bars = mle_error_bars(counts, setup, 25, 77);
    CHECK(bars.n_resamples == 25);
    CHECK(bars.real_std.maxCoeff() > 0.0);
    CHECK(bars.real_std.maxCoeff() < 0.2);
    CHECK(bars.imag_std.minCoeff() >= 0.0);
    // Exact counts carry no shot noise to resample.
    CHECK_THROWS_AS(mle_error_bars(simulate_tomography(rho, setup, 0), setup, 5, 1),
                    std::invalid_argument);
}

TEST_CASE("fidelity conventions") {
    const CMatrix rho = random_mixed(21);
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));
    CVector a(3), b(3);
    a << 1, 0, 0;
    b << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0;
    // Squared-trace convention: pure states give |<a|b>|^2.
    CHECK(fidelity(pure_state_density(a), pure_state_density(b)) ==
          doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("phase-adjusted settings undo preparation phases") {
    const TomographySetup setup = TomographySetup::standard();
    const double phi1 = 0.8, phi2 = -1.9;
    const TomographySetup adjusted = setup.phase_adjusted(phi1, phi2);
    Matrix3 d = Matrix3::Identity();
    d(1, 1) = std::exp(-ii * phi1);
    d(2, 2) = std::exp(-ii * phi2);
    const CMatrix rho_target = random_mixed(33);
    // Physical state differs from the target by the inverse phase gate.
    const CMatrix rho_physical = d.adjoint() * rho_target * d;
    const CountsTable via_adjusted = simulate_tomography(rho_physical, adjusted, 0);
    const CountsTable via_standard = simulate_tomography(rho_target, setup, 0);
    for (std::size_t s = 0; s < 9; ++s) {
        for (int j = 0; j < 3; ++j) {
            CHECK(via_adjusted.counts[s][j] ==
                  doctest::Approx(via_standard.counts[s][j]).epsilon(1e-12));
        }
    }
}
