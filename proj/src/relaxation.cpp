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

#include "mpemba/relaxation.hpp"

#include <cmath>

#include "mpemba/kernels/dot.hpp"

namespace mpemba {

std::vector<double> make_time_grid(const Spectrum& spec, const GridSpec& grid) {
    const auto taus = spec.timescales();
    const double tau1 = taus.front();
    const double tau_fast = taus.back();
    const double t_max = grid.t_max > 0 ? grid.t_max : 3.0 * tau1;
    const double t_min = tau_fast / 10.0;
    if (grid.n_points < 2 || t_max <= t_min) {
        throw std::invalid_argument("make_time_grid: bad grid spec");
    }
    std::vector<double> t;
    t.reserve(grid.n_points + 1);
    t.push_back(0.0);
    const double log_min = std::log(t_min);
    const double step = (std::log(t_max) - log_min) / (grid.n_points - 1);
    for (int k = 0; k < grid.n_points; ++k) {
        t.push_back(std::exp(log_min + k * step));
    }
    t.back() = t_max;  // avoid rounding past t_max
    return t;
}

CMatrix evolve_modes(const Spectrum& spec, const CVector& a, double t) {
    if (t < 0) throw std::invalid_argument("evolve_modes: t must be nonnegative");
    CMatrix rho = spec.steady_state;
    for (int i = 1; i <= spec.n_modes; ++i) {
        rho += a(i) * std::exp(spec.eigenvalues(i) * t) * spec.right[i];
    }
    return rho;
}

CMatrix mode_derivative(const Spectrum& spec, const CVector& a, double t) {
    CMatrix d = CMatrix::Zero(spec.dim, spec.dim);
    for (int i = 1; i <= spec.n_modes; ++i) {
        d += a(i) * spec.eigenvalues(i) * std::exp(spec.eigenvalues(i) * t) * spec.right[i];
    }
    return d;
}

double distance(const CMatrix& rho_t, const CMatrix& rho_ss, int p) {
    if (rho_t.rows() != rho_ss.rows() || rho_t.cols() != rho_ss.cols()) {
        throw DimensionMismatch("distance: shape mismatch");
    }
    return schatten_norm(rho_t - rho_ss, p);
}

double speed(const Spectrum& spec, const CVector& a, double t, int p) {
    if (t < 0) throw std::invalid_argument("speed: t must be nonnegative");
    return schatten_norm(mode_derivative(spec, a, t), p);
}

double geometric_speed(const CMatrix& rho_t, const Superoperator& s, const CMatrix& rho_ss) {
    const CMatrix delta = rho_t - rho_ss;
    const double denom = delta.norm();
    if (denom < 1e-12) {
        throw DegenerateAtSteadyState("geometric_speed: state is at the steady state");
    }
    const CMatrix rho_dot = apply(s, rho_t);
    const dcomplex pairing = (delta.adjoint() * rho_dot).trace();
    return std::abs(pairing) / denom;
}

Trajectory trajectory(const Spectrum& spec, const CMatrix& rho_in, const GridSpec& grid, int p) {
    check_density_matrix(rho_in);
    Trajectory traj;
    traj.norm_p = p;
    traj.initial_state = rho_in;
    traj.overlap_vector = overlaps(spec, rho_in);
    traj.times = make_time_grid(spec, grid);

    const auto& a = traj.overlap_vector;
    traj.distance.reserve(traj.times.size());
    traj.speed.reserve(traj.times.size());
    traj.geometric_speed.reserve(traj.times.size());
    for (double t : traj.times) {
        CMatrix delta = CMatrix::Zero(spec.dim, spec.dim);
        CMatrix rho_dot = CMatrix::Zero(spec.dim, spec.dim);
        for (int i = 1; i <= spec.n_modes; ++i) {
            const dcomplex f = a(i) * std::exp(spec.eigenvalues(i) * t);
            delta += f * spec.right[i];
            rho_dot += f * spec.eigenvalues(i) * spec.right[i];
        }
        traj.distance.push_back(schatten_norm(delta, p));
        traj.speed.push_back(schatten_norm(rho_dot, p));
        const double hs = delta.norm();
        traj.geometric_speed.push_back(
            hs < 1e-12 ? 0.0 : std::abs((delta.adjoint() * rho_dot).trace()) / hs);
    }
    return traj;
}

CurveWorkspace::CurveWorkspace(const Spectrum& spec, std::vector<double> times)
    : spec_(&spec), times_(std::move(times)), n_(spec.n_modes) {
    gram_.resize(n_, n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            gram_(i, k) = (spec.right[i + 1].adjoint() * spec.right[k + 1]).trace();
        }
    }
    const std::size_t nt = times_.size();
    profiles_.resize(2 * n_ * n_, static_cast<Eigen::Index>(nt));
    CVector ph(n_);
    for (std::size_t j = 0; j < nt; ++j) {
        for (int i = 0; i < n_; ++i) {
            ph(i) = std::exp(spec.eigenvalues(i + 1) * times_[j]);
        }
        Eigen::Index m = 0;
        for (int i = 0; i < n_; ++i) {
            for (int k = 0; k < n_; ++k, ++m) {
                const dcomplex val = gram_(i, k) * std::conj(ph(i)) * ph(k);
                profiles_(2 * m, j) = val.real();
                profiles_(2 * m + 1, j) = val.imag();
            }
        }
    }
}

Eigen::VectorXd CurveWorkspace::weights(const CVector& a) const {
    Eigen::VectorXd w(2 * n_ * n_);
    Eigen::Index m = 0;
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k, ++m) {
            const dcomplex o = std::conj(a(i + 1)) * a(k + 1);
            w(2 * m) = o.real();
            w(2 * m + 1) = -o.imag();
        }
    }
    return w;
}

Eigen::VectorXd CurveWorkspace::speed_weights(const CVector& a) const {
    CVector b(a.size());
    b(0) = 0;
    for (int i = 1; i <= n_; ++i) b(i) = a(i) * spec_->eigenvalues(i);
    return weights(b);
}

void CurveWorkspace::distance_curve(const Eigen::VectorXd& w, std::vector<double>& out) const {
    const std::size_t nt = times_.size();
    out.resize(nt);
    const std::size_t len = static_cast<std::size_t>(w.size());
    for (std::size_t j = 0; j < nt; ++j) {
        const double d2 = kernels::dot(w.data(), profiles_.col(static_cast<Eigen::Index>(j)).data(), len);
        out[j] = std::sqrt(std::max(0.0, d2));
    }
}

double CurveWorkspace::value_at(const Eigen::VectorXd& w, double t) const {
    CVector ph(n_);
    for (int i = 0; i < n_; ++i) {
        ph(i) = std::exp(spec_->eigenvalues(i + 1) * t);
    }
    dcomplex acc = 0;
    Eigen::Index m = 0;
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k, ++m) {
            const dcomplex o(w(2 * m), -w(2 * m + 1));
            acc += o * gram_(i, k) * std::conj(ph(i)) * ph(k);
        }
    }
    return std::sqrt(std::max(0.0, acc.real()));
}

std::vector<double> CurveWorkspace::distance_curve(const CVector& a) const {
    std::vector<double> out;
    distance_curve(weights(a), out);
    return out;
}

}  // namespace mpemba
