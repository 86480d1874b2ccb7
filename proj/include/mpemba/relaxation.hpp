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

#include <Eigen/Dense>
#include <vector>

#include "mpemba/spectral.hpp"

namespace mpemba {

// Time grid for trajectories: t = 0 followed by n_points log-spaced samples
// from tau_N/10 to t_max. t_max <= 0 means 3 tau_1.
struct GridSpec {
    double t_max = 0;
    int n_points = 2000;
};

std::vector<double> make_time_grid(const Spectrum& spec, const GridSpec& grid);

// rho_ss + sum_{i>=1} a_i e^{lambda_i t} R_i
CMatrix evolve_modes(const Spectrum& spec, const CVector& a, double t);

// sum_{i>=1} a_i lambda_i e^{lambda_i t} R_i  (the mode-expansion rho-dot)
CMatrix mode_derivative(const Spectrum& spec, const CVector& a, double t);

double distance(const CMatrix& rho_t, const CMatrix& rho_ss, int p);

// v(t) = || sum a_i lambda_i e^{lambda_i t} R_i ||_p
double speed(const Spectrum& spec, const CVector& a, double t, int p);

// v_D = |Tr[(rho_t - rho_ss) rho_dot]| / ||rho_t - rho_ss||_2. Throws
// DegenerateAtSteadyState when the denominator is below 1e-12.
double geometric_speed(const CMatrix& rho_t, const Superoperator& s, const CMatrix& rho_ss);

struct Trajectory {
    std::vector<double> times;
    std::vector<double> distance;
    std::vector<double> speed;
    std::vector<double> geometric_speed;
    int norm_p = 2;
    CMatrix initial_state;
    CVector overlap_vector;
};

Trajectory trajectory(const Spectrum& spec, const CMatrix& rho_in, const GridSpec& grid,
                      int p = 2);

// Fast path for Hilbert-Schmidt (p=2) distance and speed curves, shared by
// all initial states on a fixed grid. D^2(t) and v^2(t) are Hermitian
// quadratic forms in the overlap vector; per time point they reduce to a
// real dot product against a precomputed profile, evaluated by the
// runtime-dispatched kernel.
class CurveWorkspace {
  public:
    CurveWorkspace(const Spectrum& spec, std::vector<double> times);

    const std::vector<double>& times() const { return times_; }
    const Spectrum& spectrum() const { return *spec_; }

    // Weight vector for a state's distance curve (or its speed curve when
    // built from a_i lambda_i).
    Eigen::VectorXd weights(const CVector& a) const;
    Eigen::VectorXd speed_weights(const CVector& a) const;

    void distance_curve(const Eigen::VectorXd& w, std::vector<double>& out) const;
    double value_at(const Eigen::VectorXd& w, double t) const;  // any t >= 0

    std::vector<double> distance_curve(const CVector& a) const;

  private:
    const Spectrum* spec_;
    std::vector<double> times_;
    int n_;                    // number of decay modes
    CMatrix gram_;             // G_ik = Tr[R_i^dag R_k], i,k >= 1
    Eigen::MatrixXd profiles_; // (2 n^2) x T, column j = profile at t_j
};

}  // namespace mpemba
