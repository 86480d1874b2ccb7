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
#include <optional>
#include <vector>

#include "mpemba/ion_model.hpp"
#include "mpemba/relaxation.hpp"

namespace mpemba {

enum class MeClass { NoME, ME, MultiME, Higher };

const char* to_string(MeClass c);

// Classification of one initial-state pair. 'f' is the initially farther
// state, 'c' the closer one; delta_a* = |a_i^f| - |a_i^c| with mode 1 the
// slowest and mode N the fastest.
struct PairRecord {
    std::uint64_t index = 0;
    double d0_f = 0, d0_c = 0;
    double delta_a1 = 0, delta_a2 = 0, delta_aN = 0;
    std::vector<double> crossing_times;  // strictly increasing, in (0, t_max]
    MeClass cls = MeClass::NoME;
};

// Zeros of D^f(t) - D^c(t): sign-change bracketing on the trajectory grid,
// refined by bisection on the continuous mode-expansion curves to relative
// time tolerance 1e-9. Grazing contacts (|delta D| dipping below threshold
// without a sign change) do not count; root pairs with no real separation
// between them are dropped as numerical tangencies.
std::vector<double> crossing_times(const Spectrum& spec, const Trajectory& traj_f,
                                   const Trajectory& traj_c);

PairRecord classify_pair(const Spectrum& spec, const CVector& psi_a, const CVector& psi_b,
                         const GridSpec& grid = {}, int p = 2);

struct QuadrantStats {
    // Quadrants indexed by (sign delta_aN > 0, sign delta_a1 > 0); records
    // within 1e-12 of a boundary are excluded.
    long counts[2][2][4] = {};  // [aN>0][a1>0][class]
    long total(int q_aN, int q_a1) const;
    double fraction(int q_aN, int q_a1, MeClass cls) const;
};

struct PhaseDiagram {
    std::vector<PairRecord> records;
    QuadrantStats stats;
    double tau1 = 0;
};

// Monte Carlo over Haar-random pure-state pairs; embarrassingly parallel
// with seed-derived per-pair streams, bit-reproducible for a fixed seed.
PhaseDiagram phase_diagram(const Spectrum& spec, int n_pairs, std::uint64_t seed,
                           const GridSpec& grid = {}, int n_threads = 0);

struct CrossingHistogram {
    std::vector<double> edges;   // 51 log-spaced edges, units of tau_1
    std::vector<long> first;     // first-crossing counts
    std::vector<long> second;    // second-crossing counts (MultiME only)
    bool all_before_tau1 = true;
    long n_records = 0;
};

CrossingHistogram crossing_histogram(const PhaseDiagram& pd, const Spectrum& spec, MeClass cls);

struct CorrelationTable {
    // Pearson correlations of v(t) with the indicated overlap magnitude
    // over Haar samples; NaN when the sample has zero variance.
    double corr_v0_aN = 0;
    double corr_v2tau2_a2 = 0;
    double corr_vtau1_a1 = 0;
    int n_states = 0;
};

CorrelationTable speed_overlap_correlation(const Spectrum& spec, int n_states,
                                           std::uint64_t seed);

struct SweepRow {
    double s = 0;
    double d0 = 0, d_tau2 = 0, d_tau1 = 0;
    double v0 = 0, v_tau2 = 0, v_tau1 = 0;
    double a1 = 0, a2 = 0, aN = 0;  // overlap magnitudes
    double truncated_speed_rel_dev = 0;  // modes 2..5 sum vs full v(tau_2)
};

std::vector<SweepRow> s_sweep(const Spectrum& spec, const StateFamilyContext& ctx,
                              const std::vector<double>& s_grid, int p = 2);

}  // namespace mpemba
