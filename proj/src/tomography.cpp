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

#include "mpemba/tomography.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

namespace mpemba {

namespace {

// Rows of W are the measured basis vectors (conjugated): p_j = <j|W rho W^dag|j>.
Matrix3 basis_setting(const Vector3& v0, const Vector3& v1, const Vector3& v2) {
    Matrix3 w;
    w.row(0) = v0.adjoint();
    w.row(1) = v1.adjoint();
    w.row(2) = v2.adjoint();
    return w;
}

}  // namespace

TomographySetup TomographySetup::standard() {
    const Vector3 e0 = Vector3::Unit(0), e1 = Vector3::Unit(1), e2 = Vector3::Unit(2);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    auto plus = [&](const Vector3& a, const Vector3& b) -> Vector3 {
        return inv_sqrt2 * (a + b);
    };
    auto minus = [&](const Vector3& a, const Vector3& b) -> Vector3 {
        return inv_sqrt2 * (a - b);
    };
    auto plus_i = [&](const Vector3& a, const Vector3& b) -> Vector3 {
        return inv_sqrt2 * (a + ii * b);
    };
    auto minus_i = [&](const Vector3& a, const Vector3& b) -> Vector3 {
        return inv_sqrt2 * (a - ii * b);
    };

    TomographySetup setup;
    const Matrix3 comp = basis_setting(e0, e1, e2);
    // z/x/y per subspace; the z settings coincide with the computational basis.
    setup.settings = {
        comp,
        basis_setting(plus(e0, e1), minus(e0, e1), e2),
        basis_setting(plus_i(e0, e1), minus_i(e0, e1), e2),
        comp,
        basis_setting(plus(e0, e2), minus(e0, e2), e1),
        basis_setting(plus_i(e0, e2), minus_i(e0, e2), e1),
        comp,
        basis_setting(plus(e1, e2), minus(e1, e2), e0),
        basis_setting(plus_i(e1, e2), minus_i(e1, e2), e0),
    };
    return setup;
}

TomographySetup TomographySetup::phase_adjusted(double phi_l1, double phi_l2) const {
    Matrix3 d = Matrix3::Identity();
    d(1, 1) = std::exp(-ii * phi_l1);
    d(2, 2) = std::exp(-ii * phi_l2);
    TomographySetup adjusted;
    adjusted.settings.reserve(settings.size());
    for (const Matrix3& w : settings) {
        adjusted.settings.push_back(w * d);
    }
    return adjusted;
}

std::array<Matrix3, 3> TomographySetup::projectors(std::size_t setting) const {
    const Matrix3& w = settings.at(setting);
    std::array<Matrix3, 3> proj;
    for (int j = 0; j < 3; ++j) {
        const Vector3 v = w.row(j).adjoint();
        proj[j] = v * v.adjoint();
    }
    return proj;
}

CountsTable simulate_tomography(const CMatrix& rho, const TomographySetup& setup,
                                long shots_per_setting, std::uint64_t seed) {
    check_density_matrix(rho);
    CountsTable table;
    table.shots_per_setting = shots_per_setting > 0 ? static_cast<double>(shots_per_setting) : 0;
    std::mt19937_64 rng(seed);
    for (const Matrix3& w : setup.settings) {
        const Matrix3 rotated = w * rho * w.adjoint();
        std::array<double, 3> p{};
        double total = 0;
        for (int j = 0; j < 3; ++j) {
            p[j] = std::max(0.0, rotated(j, j).real());
            total += p[j];
        }
        for (auto& x : p) x /= total;

        if (shots_per_setting <= 0) {
            table.counts.push_back(p);
            continue;
        }
        std::array<double, 3> n{};
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (long s = 0; s < shots_per_setting; ++s) {
            const double u = uni(rng);
            if (u < p[0]) {
                n[0] += 1;
            } else if (u < p[0] + p[1]) {
                n[1] += 1;
            } else {
                n[2] += 1;
            }
        }
        table.counts.push_back(n);
    }
    return table;
}

namespace {

double log_likelihood(const CMatrix& rho, const std::vector<std::array<Matrix3, 3>>& proj,
                      const CountsTable& counts) {
    double ll = 0;
    for (std::size_t s = 0; s < proj.size(); ++s) {
        for (int j = 0; j < 3; ++j) {
            const double n = counts.counts[s][j];
            if (n <= 0) continue;
            const double p = std::max(1e-15, (proj[s][j] * rho).trace().real());
            ll += n * std::log(p);
        }
    }
    return ll;
}

CMatrix r_operator(const CMatrix& rho, const std::vector<std::array<Matrix3, 3>>& proj,
                   const CountsTable& counts) {
    CMatrix r = CMatrix::Zero(3, 3);
    for (std::size_t s = 0; s < proj.size(); ++s) {
        for (int j = 0; j < 3; ++j) {
            const double n = counts.counts[s][j];
            if (n <= 0) continue;
            const double p = std::max(1e-15, (proj[s][j] * rho).trace().real());
            r += (n / p) * proj[s][j];
        }
    }
    return r;
}

}  // namespace

MleResult mle_reconstruct(const CountsTable& counts, const TomographySetup& setup) {
    if (counts.counts.size() != setup.settings.size()) {
        throw std::invalid_argument("mle_reconstruct: counts do not cover all settings");
    }
    double total = 0;
    for (const auto& row : counts.counts) total += row[0] + row[1] + row[2];
    if (total <= 0) {
        throw std::invalid_argument("mle_reconstruct: all counts are zero");
    }
    std::vector<std::array<Matrix3, 3>> proj;
    proj.reserve(setup.settings.size());
    for (std::size_t s = 0; s < setup.settings.size(); ++s) {
        proj.push_back(setup.projectors(s));
    }

    MleResult result;
    CMatrix rho = CMatrix::Identity(3, 3) / 3.0;
    double ll = log_likelihood(rho, proj, counts);
    result.loglik_trace.push_back(ll);

    constexpr int max_iter = 10000;
    for (int it = 0; it < max_iter; ++it) {
        const CMatrix r = r_operator(rho, proj, counts);
        CMatrix candidate = r * rho * r;
        candidate /= candidate.trace().real();
        double ll_new = log_likelihood(candidate, proj, counts);
        if (ll_new < ll) {
            // Diluted step: guaranteed uphill for small enough epsilon.
            double eps = 0.5;
            const CMatrix id = CMatrix::Identity(3, 3);
            while (eps > 1e-8) {
                CMatrix g = id + (eps / total) * r;
                CMatrix diluted = g * rho * g.adjoint();
                diluted /= diluted.trace().real();
                const double ll_d = log_likelihood(diluted, proj, counts);
                if (ll_d >= ll) {
                    candidate = std::move(diluted);
                    ll_new = ll_d;
                    break;
                }
                eps *= 0.5;
            }
            if (ll_new < ll) break;  // no uphill direction left: converged
        }
        rho = std::move(candidate);
        result.iterations = it + 1;
        result.loglik_trace.push_back(ll_new);
        if (ll_new - ll < 1e-10) {
            ll = ll_new;
            result.converged = true;
            break;
        }
        ll = ll_new;
    }
    // Clean tiny negative eigenvalues from roundoff.
    rho = (0.5 * (rho + rho.adjoint())).eval();
    result.rho = rho / rho.trace().real();
    return result;
}

ErrorBars mle_error_bars(const CountsTable& counts, const TomographySetup& setup,
                         int n_resamples, std::uint64_t seed) {
    if (counts.exact()) {
        throw std::invalid_argument("mle_error_bars: need finite-shot counts");
    }
    const long shots = static_cast<long>(counts.shots_per_setting);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    Eigen::Matrix3d mean_re = Eigen::Matrix3d::Zero(), mean_im = Eigen::Matrix3d::Zero();
    Eigen::Matrix3d m2_re = Eigen::Matrix3d::Zero(), m2_im = Eigen::Matrix3d::Zero();
    for (int b = 0; b < n_resamples; ++b) {
        CountsTable resampled;
        resampled.shots_per_setting = counts.shots_per_setting;
        for (const auto& row : counts.counts) {
            const double tot = row[0] + row[1] + row[2];
            std::array<double, 3> p = {row[0] / tot, row[1] / tot, row[2] / tot};
            std::array<double, 3> n{};
            for (long s = 0; s < shots; ++s) {
                const double u = uni(rng);
                if (u < p[0]) {
                    n[0] += 1;
                } else if (u < p[0] + p[1]) {
                    n[1] += 1;
                } else {
                    n[2] += 1;
                }
            }
            resampled.counts.push_back(n);
        }
        const CMatrix rho = mle_reconstruct(resampled, setup).rho;
        mean_re += rho.real();
        mean_im += rho.imag();
        m2_re += rho.real().cwiseProduct(rho.real());
        m2_im += rho.imag().cwiseProduct(rho.imag());
    }
    const double nb = n_resamples;
    ErrorBars bars;
    bars.n_resamples = n_resamples;
    bars.real_std = ((m2_re / nb) - (mean_re / nb).cwiseProduct(mean_re / nb))
                        .cwiseMax(0.0)
                        .cwiseSqrt();
    bars.imag_std = ((m2_im / nb) - (mean_im / nb).cwiseProduct(mean_im / nb))
                        .cwiseMax(0.0)
                        .cwiseSqrt();
    return bars;
}

double fidelity(const CMatrix& rho, const CMatrix& sigma) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (rho + rho.adjoint()));
    const CMatrix sqrt_rho = es.operatorSqrt();
    Eigen::SelfAdjointEigenSolver<CMatrix> inner(sqrt_rho * sigma * sqrt_rho);
    double tr = 0;
    for (Eigen::Index i = 0; i < inner.eigenvalues().size(); ++i) {
        tr += std::sqrt(std::max(0.0, inner.eigenvalues()(i)));
    }
    return tr * tr;
}

}  // namespace mpemba
