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

#include <array>
#include <cstdint>
#include <vector>

#include "mpemba/gates.hpp"

namespace mpemba {

// Projective qutrit tomography. A setting is a pre-measurement rotation W:
// outcome j occurs with probability <j| W rho W^dag |j>. The standard set
// holds nine settings (z, x, y for each of the 0-1, 0-2 and 1-2 subspaces,
// the three z settings being the shared computational basis), covering the
// fifteen basis states |0>,|1>,|2>,(|i>+-|j>)/sqrt2,(|i>+-i|j>)/sqrt2.
struct TomographySetup {
    std::vector<Matrix3> settings;

    static TomographySetup standard();

    // Settings for measuring in the physical frame after a preparation with
    // accumulated phases: W -> W diag(1, e^{-i phi_l1}, e^{-i phi_l2}).
    TomographySetup phase_adjusted(double phi_l1, double phi_l2) const;

    // Projectors of one setting; they sum to the identity.
    std::array<Matrix3, 3> projectors(std::size_t setting) const;
};

struct CountsTable {
    std::vector<std::array<double, 3>> counts;  // one row per setting
    double shots_per_setting = 0;               // 0 means exact probabilities
    bool exact() const { return shots_per_setting <= 0; }
};

// shots <= 0 returns exact Born probabilities; finite shots draws a
// multinomial sample per setting, reproducibly from the seed.
CountsTable simulate_tomography(const CMatrix& rho, const TomographySetup& setup,
                                long shots_per_setting, std::uint64_t seed = 0);

struct MleResult {
    CMatrix rho;
    std::vector<double> loglik_trace;  // nondecreasing per iteration
    int iterations = 0;
    bool converged = false;
};

// Iterative R-rho-R maximum-likelihood reconstruction with a diluted
// fallback step; stops when the likelihood gain drops below 1e-10 or after
// 1e4 iterations.
MleResult mle_reconstruct(const CountsTable& counts, const TomographySetup& setup);

struct ErrorBars {
    Eigen::Matrix3d real_std;
    Eigen::Matrix3d imag_std;
    int n_resamples = 0;
};

// Bootstrap error bars: resample the counts B times, reconstruct each,
// report elementwise spreads.
ErrorBars mle_error_bars(const CountsTable& counts, const TomographySetup& setup,
                         int n_resamples, std::uint64_t seed);

// Uhlmann fidelity (squared-trace convention).
double fidelity(const CMatrix& rho, const CMatrix& sigma);

}  // namespace mpemba
