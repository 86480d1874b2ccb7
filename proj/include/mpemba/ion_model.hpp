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

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mpemba/spectral.hpp"

namespace mpemba {

// J_a = sqrt(gamma_a)|0><a| (standard rate convention) or gamma_a|0><a|
// (the literal amplitude convention; selectable so reproduction runs can
// report which one matches).
enum class JumpConvention { SqrtRate, LiteralRate };

// Three-level ion model. All frequencies in rad/s; the CLI converts from
// kHz at the boundary.
struct IonParams {
    double omega1 = 0;  // |0>-|1> Rabi frequency
    double omega2 = 0;  // |0>-|2> Rabi frequency
    double gamma1 = 0;  // |1>->|0> decay rate
    double gamma2 = 0;  // |2>->|0> decay rate
    JumpConvention convention = JumpConvention::SqrtRate;
    double phi1 = 0;  // drive phase on the |0>-|1> transition
    double phi2 = 0;  // drive phase on the |0>-|2> transition

    // Omega_1 = 2pi x 20.0 kHz, Omega_2 = 0.06 Omega_1,
    // gamma_1 = 2pi x 40.0 kHz, gamma_2 = 2pi x 0.03 kHz.
    static IonParams reference_defaults(JumpConvention c = JumpConvention::SqrtRate);
};

// H = sum_a Omega_a/2 (e^{i phi_a}|0><a| + h.c.), jumps c_a|0><a|.
std::pair<CMatrix, std::vector<CMatrix>> build_ion_model(const IonParams& p);

// Rotated initial-state family |s> = cos(s)|phi_1> - i sin(s)|phi_2>, built
// from the eigenvectors of the Hermitized slowest left eigenmatrix.
struct StateFamilyContext {
    CVector phi1, phi2;  // orthonormal
    double alpha1 = 0;   // eigenvalue paired with phi1; negative
    double alpha2 = 0;   // eigenvalue paired with phi2; positive
    double s_star = 0;   // arctan(sqrt(|alpha1/alpha2|)); a_1 vanishes there
    dcomplex l1_phase{1.0, 0.0};  // e^{i theta} applied to L_1 before Hermitization
};

// Mutates the spectrum: the joint phase/sign gauge on (L_1, R_1) that makes
// L_1 Hermitian with its largest-magnitude eigenvalue positive is applied in
// place, so downstream overlap formulas use real alpha's.
StateFamilyContext state_family_context(Spectrum& spec);

CVector rotated_state(const StateFamilyContext& ctx, double s);

// Haar-distributed pure state: normalized vector of iid complex Gaussians.
CVector sample_haar_pure(int dim, std::mt19937_64& rng);
CVector sample_haar_pure(int dim, std::uint64_t seed);

// Fixed splitter used to derive independent per-task seeds for parallel
// sampling (splitmix64 over base ^ golden-ratio-mixed task index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t task_index);

}  // namespace mpemba
