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

#include "mpemba/mpemba.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

namespace mpemba {

const char* to_string(MeClass c) {
    switch (c) {
        case MeClass::NoME: return "NoME";
        case MeClass::ME: return "ME";
        case MeClass::MultiME: return "MultiME";
        case MeClass::Higher: return "Higher";
    }
    return "?";
}

namespace {

int class_index(MeClass c) { return static_cast<int>(c); }

MeClass class_from_count(std::size_t n) {
    if (n == 0) return MeClass::NoME;
    if (n == 1) return MeClass::ME;
    if (n == 2) return MeClass::MultiME;
    return MeClass::Higher;
}

// Sign-change bracketing on the sampled difference curve, bisection
// refinement on the continuous evaluator.
std::vector<double> find_crossings(const std::vector<double>& times,
                                   const std::vector<double>& delta_samples,
                                   const std::function<double(double)>& delta_at,
                                   double tau1, double d0_scale) {
    const double graze_tol = 1e-10 * d0_scale;
    std::vector<std::pair<double, double>> brackets;
    int last_sign = delta_samples[0] > 0 ? 1 : -1;
    std::size_t last_idx = 0;
    for (std::size_t j = 1; j < times.size(); ++j) {
        const double d = delta_samples[j];
        if (d == 0.0) continue;
        const int s = d > 0 ? 1 : -1;
        if (s != last_sign) {
            brackets.emplace_back(times[last_idx], times[j]);
            last_sign = s;
        }
        last_idx = j;
    }

    std::vector<double> roots;
    for (auto [ta, tb] : brackets) {
        double fa = delta_at(ta);
        double fb = delta_at(tb);
        if (fa == 0.0) {
            roots.push_back(ta);
            continue;
        }
        if (fa * fb > 0) continue;  // borderline sample, no actual sign change
        while ((tb - ta) > 1e-9 * tb && tb > ta) {
            const double tm = 0.5 * (ta + tb);
            const double fm = delta_at(tm);
            if (fm == 0.0) {
                ta = tb = tm;
                break;
            }
            if (fa * fm < 0) {
                tb = tm;
            } else {
                ta = tm;
                fa = fm;
            }
        }
        roots.push_back(0.5 * (ta + tb));
    }
    std::sort(roots.begin(), roots.end());

    // Drop root pairs with no real excursion between them (grazing contact).
    for (std::size_t m = 0; m + 1 < roots.size();) {
        double peak = std::abs(delta_at(0.5 * (roots[m] + roots[m + 1])));
        for (std::size_t j = 0; j < times.size(); ++j) {
            if (times[j] > roots[m] && times[j] < roots[m + 1]) {
                peak = std::max(peak, std::abs(delta_samples[j]));
            }
        }
        if (peak < graze_tol) {
            roots.erase(roots.begin() + m, roots.begin() + m + 2);
        } else {
            ++m;
        }
    }
    // Merge crossings closer than 1e-6 tau_1.
    for (std::size_t m = 0; m + 1 < roots.size();) {
        if (roots[m + 1] - roots[m] < 1e-6 * tau1) {
            roots[m] = 0.5 * (roots[m] + roots[m + 1]);
            roots.erase(roots.begin() + m + 1);
        } else {
            ++m;
        }
    }
    return roots;
}

struct PairCurves {
    CVector a_f, a_c;
    double d0_f, d0_c;
    std::vector<double> delta;  // D_f - D_c on the grid
};

PairRecord classify_on_workspace(const CurveWorkspace& ws, const CVector& psi_a,
                                 const CVector& psi_b, std::uint64_t index,
                                 std::vector<double>& buf_a, std::vector<double>& buf_b) {
    const Spectrum& spec = ws.spectrum();
    const CVector a = overlaps(spec, pure_state_density(psi_a));
    const CVector b = overlaps(spec, pure_state_density(psi_b));
    const Eigen::VectorXd wa = ws.weights(a);
    const Eigen::VectorXd wb = ws.weights(b);
    ws.distance_curve(wa, buf_a);
    ws.distance_curve(wb, buf_b);

    const double d0a = buf_a[0], d0b = buf_b[0];
    if (std::abs(d0a - d0b) <= 1e-12) {
        throw TiedStart("classify_pair: initial distances tied");
    }
    const bool a_is_far = d0a > d0b;
    const CVector& af = a_is_far ? a : b;
    const CVector& ac = a_is_far ? b : a;
    const std::vector<double>& cf = a_is_far ? buf_a : buf_b;
    const std::vector<double>& cc = a_is_far ? buf_b : buf_a;
    const Eigen::VectorXd& wf = a_is_far ? wa : wb;
    const Eigen::VectorXd& wc = a_is_far ? wb : wa;

    const std::vector<double>& times = ws.times();
    std::vector<double> delta(times.size());
    for (std::size_t j = 0; j < times.size(); ++j) delta[j] = cf[j] - cc[j];

    const double tau1 = spec.tau(1);
    auto delta_at = [&](double t) { return ws.value_at(wf, t) - ws.value_at(wc, t); };

    PairRecord rec;
    rec.index = index;
    rec.d0_f = std::max(d0a, d0b);
    rec.d0_c = std::min(d0a, d0b);
    rec.crossing_times = find_crossings(times, delta, delta_at, tau1, rec.d0_f);
    rec.cls = class_from_count(rec.crossing_times.size());
    const int n = spec.n_modes;
    rec.delta_a1 = std::abs(af(1)) - std::abs(ac(1));
    rec.delta_a2 = std::abs(af(2)) - std::abs(ac(2));
    rec.delta_aN = std::abs(af(n)) - std::abs(ac(n));
    return rec;
}

}  // namespace

std::vector<double> crossing_times(const Spectrum& spec, const Trajectory& traj_f,
                                   const Trajectory& traj_c) {
    if (traj_f.times != traj_c.times) {
        throw GridMismatch("crossing_times: trajectories use different time grids");
    }
    if (traj_f.norm_p != traj_c.norm_p) {
        throw GridMismatch("crossing_times: trajectories use different norms");
    }
    const double d0f = traj_f.distance[0], d0c = traj_c.distance[0];
    if (d0f - d0c <= 1e-12) {
        throw TiedStart("crossing_times: farther trajectory does not start farther");
    }
    std::vector<double> delta(traj_f.times.size());
    for (std::size_t j = 0; j < delta.size(); ++j) {
        delta[j] = traj_f.distance[j] - traj_c.distance[j];
    }
    const int p = traj_f.norm_p;
    auto delta_at = [&](double t) {
        const CMatrix rf = evolve_modes(spec, traj_f.overlap_vector, t);
        const CMatrix rc = evolve_modes(spec, traj_c.overlap_vector, t);
        return schatten_norm(rf - spec.steady_state, p) -
               schatten_norm(rc - spec.steady_state, p);
    };
    return find_crossings(traj_f.times, delta, delta_at, spec.tau(1), d0f);
}

PairRecord classify_pair(const Spectrum& spec, const CVector& psi_a, const CVector& psi_b,
                         const GridSpec& grid, int p) {
    CVector na = psi_a.normalized();
    CVector nb = psi_b.normalized();
    if (p == 2) {
        CurveWorkspace ws(spec, make_time_grid(spec, grid));
        std::vector<double> buf_a, buf_b;
        return classify_on_workspace(ws, na, nb, 0, buf_a, buf_b);
    }
    Trajectory ta = trajectory(spec, pure_state_density(na), grid, p);
    Trajectory tb = trajectory(spec, pure_state_density(nb), grid, p);
    if (std::abs(ta.distance[0] - tb.distance[0]) <= 1e-12) {
        throw TiedStart("classify_pair: initial distances tied");
    }
    const bool a_is_far = ta.distance[0] > tb.distance[0];
    const Trajectory& tf = a_is_far ? ta : tb;
    const Trajectory& tc = a_is_far ? tb : ta;
    PairRecord rec;
    rec.d0_f = tf.distance[0];
    rec.d0_c = tc.distance[0];
    rec.crossing_times = crossing_times(spec, tf, tc);
    rec.cls = class_from_count(rec.crossing_times.size());
    const int n = spec.n_modes;
    rec.delta_a1 = std::abs(tf.overlap_vector(1)) - std::abs(tc.overlap_vector(1));
    rec.delta_a2 = std::abs(tf.overlap_vector(2)) - std::abs(tc.overlap_vector(2));
    rec.delta_aN = std::abs(tf.overlap_vector(n)) - std::abs(tc.overlap_vector(n));
    return rec;
}

long QuadrantStats::total(int q_aN, int q_a1) const {
    long t = 0;
    for (int c = 0; c < 4; ++c) t += counts[q_aN][q_a1][c];
    return t;
}

double QuadrantStats::fraction(int q_aN, int q_a1, MeClass cls) const {
    const long t = total(q_aN, q_a1);
    if (t == 0) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(counts[q_aN][q_a1][class_index(cls)]) / static_cast<double>(t);
}

PhaseDiagram phase_diagram(const Spectrum& spec, int n_pairs, std::uint64_t seed,
                           const GridSpec& grid, int n_threads) {
    if (n_pairs < 1) {
        throw std::invalid_argument("phase_diagram: n_pairs must be >= 1");
    }
    const CurveWorkspace ws(spec, make_time_grid(spec, grid));
    const int d = static_cast<int>(spec.dim);

    PhaseDiagram pd;
    pd.tau1 = spec.tau(1);
    pd.records.resize(n_pairs);

    if (n_threads <= 0) {
        n_threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    n_threads = std::min(n_threads, n_pairs);

    auto worker = [&](int begin, int end) {
        std::vector<double> buf_a, buf_b;
        for (int k = begin; k < end; ++k) {
            const std::uint64_t pair_seed = derive_seed(seed, static_cast<std::uint64_t>(k));
            for (std::uint64_t attempt = 0;; ++attempt) {
                const CVector psi_a = sample_haar_pure(d, derive_seed(pair_seed, 2 * attempt));
                const CVector psi_b = sample_haar_pure(d, derive_seed(pair_seed, 2 * attempt + 1));
                try {
                    pd.records[k] = classify_on_workspace(ws, psi_a, psi_b,
                                                          static_cast<std::uint64_t>(k),
                                                          buf_a, buf_b);
                    break;
                } catch (const TiedStart&) {
                    if (attempt > 100) throw;
                }
            }
        }
    };

    if (n_threads == 1) {
        worker(0, n_pairs);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (n_pairs + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(n_pairs, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    for (const PairRecord& r : pd.records) {
        if (std::abs(r.delta_aN) <= 1e-12 || std::abs(r.delta_a1) <= 1e-12) continue;
        pd.stats.counts[r.delta_aN > 0 ? 1 : 0][r.delta_a1 > 0 ? 1 : 0][class_index(r.cls)]++;
    }
    return pd;
}

CrossingHistogram crossing_histogram(const PhaseDiagram& pd, const Spectrum& spec, MeClass cls) {
    if (cls != MeClass::ME && cls != MeClass::MultiME) {
        throw std::invalid_argument("crossing_histogram: class must be ME or MultiME");
    }
    const double tau1 = spec.tau(1);
    const double lo = spec.timescales().back() / 10.0 / tau1;
    const double hi = 3.0;
    constexpr int n_bins = 50;

    CrossingHistogram h;
    h.edges.resize(n_bins + 1);
    const double step = (std::log(hi) - std::log(lo)) / n_bins;
    for (int b = 0; b <= n_bins; ++b) h.edges[b] = std::exp(std::log(lo) + b * step);
    h.first.assign(n_bins, 0);
    h.second.assign(n_bins, 0);

    auto bin_of = [&](double x) {
        const int b = static_cast<int>(std::floor((std::log(x) - std::log(lo)) / step));
        return std::clamp(b, 0, n_bins - 1);
    };
    for (const PairRecord& r : pd.records) {
        if (r.cls != cls) continue;
        ++h.n_records;
        for (std::size_t m = 0; m < r.crossing_times.size(); ++m) {
            const double x = r.crossing_times[m] / tau1;
            if (x >= 1.0) h.all_before_tau1 = false;
            (m == 0 ? h.first : h.second)[bin_of(x)]++;
        }
    }
    return h;
}

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0 || syy == 0) return std::numeric_limits<double>::quiet_NaN();
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

CorrelationTable speed_overlap_correlation(const Spectrum& spec, int n_states,
                                           std::uint64_t seed) {
    if (n_states < 100) {
        throw std::invalid_argument("speed_overlap_correlation: need at least 100 states");
    }
    const double tau1 = spec.tau(1);
    const double tau2 = spec.tau(2);
    const int n = spec.n_modes;
    const int d = static_cast<int>(spec.dim);

    std::vector<double> v0(n_states), v2(n_states), v1(n_states);
    std::vector<double> aN(n_states), a2(n_states), a1(n_states);
    for (int k = 0; k < n_states; ++k) {
        const CVector psi = sample_haar_pure(d, derive_seed(seed, static_cast<std::uint64_t>(k)));
        const CVector a = overlaps(spec, pure_state_density(psi));
        v0[k] = speed(spec, a, 0.0, 2);
        v2[k] = speed(spec, a, 2.0 * tau2, 2);
        v1[k] = speed(spec, a, tau1, 2);
        aN[k] = std::abs(a(n));
        a2[k] = std::abs(a(2));
        a1[k] = std::abs(a(1));
    }
    CorrelationTable table;
    table.n_states = n_states;
    table.corr_v0_aN = pearson(v0, aN);
    table.corr_v2tau2_a2 = pearson(v2, a2);
    table.corr_vtau1_a1 = pearson(v1, a1);
    return table;
}

std::vector<SweepRow> s_sweep(const Spectrum& spec, const StateFamilyContext& ctx,
                              const std::vector<double>& s_grid, int p) {
    const double tau1 = spec.tau(1);
    const double tau2 = spec.tau(2);
    const int n = spec.n_modes;
    std::vector<SweepRow> rows;
    rows.reserve(s_grid.size());
    for (double s : s_grid) {
        const CVector psi = rotated_state(ctx, s);
        const CVector a = overlaps(spec, pure_state_density(psi));
        SweepRow row;
        row.s = s;
        row.d0 = distance(evolve_modes(spec, a, 0.0), spec.steady_state, p);
        row.d_tau2 = distance(evolve_modes(spec, a, tau2), spec.steady_state, p);
        row.d_tau1 = distance(evolve_modes(spec, a, tau1), spec.steady_state, p);
        row.v0 = speed(spec, a, 0.0, p);
        row.v_tau2 = speed(spec, a, tau2, p);
        row.v_tau1 = speed(spec, a, tau1, p);
        row.a1 = std::abs(a(1));
        row.a2 = std::abs(a(2));
        row.aN = std::abs(a(n));
        // Truncation check: modes 2..5 against the full sum at tau_2.
        CMatrix trunc = CMatrix::Zero(spec.dim, spec.dim);
        for (int i = 2; i <= std::min(5, n); ++i) {
            trunc += a(i) * spec.eigenvalues(i) * std::exp(spec.eigenvalues(i) * tau2) *
                     spec.right[i];
        }
        const double v_trunc = schatten_norm(trunc, p);
        row.truncated_speed_rel_dev =
            row.v_tau2 > 0 ? std::abs(v_trunc - row.v_tau2) / row.v_tau2 : 0.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mpemba
