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

#include "mpemba/io.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>

namespace mpemba {

namespace {

nlohmann::json complex_to_json(const dcomplex& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json matrix_to_json(const CMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

void write_header(std::ostream& os, const std::map<std::string, std::string>& config,
                  bool with_timestamp) {
    os << "# mpemba-lab v" << kVersion << "\n";
    for (const auto& [key, value] : config) {
        os << "# " << key << "=" << value << "\n";
    }
    if (with_timestamp) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        os << "# timestamp=" << std::put_time(std::gmtime(&now), "%FT%TZ") << "\n";
    }
}

nlohmann::json spectrum_to_json(const Spectrum& spec) {
    nlohmann::json j;
    j["dim"] = spec.dim;
    j["n_modes"] = spec.n_modes;
    j["liouvillian_norm"] = spec.liouvillian_norm;
    nlohmann::json vals = nlohmann::json::array();
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
        vals.push_back(complex_to_json(spec.eigenvalues(i)));
    }
    j["eigenvalues_rad_per_s"] = vals;
    j["timescales_s"] = spec.timescales();
    j["steady_state"] = matrix_to_json(spec.steady_state);
    nlohmann::json right = nlohmann::json::array(), left = nlohmann::json::array();
    for (int i = 0; i <= spec.n_modes; ++i) {
        right.push_back(matrix_to_json(spec.right[i]));
        left.push_back(matrix_to_json(spec.left[i]));
    }
    j["right_eigenmatrices"] = right;
    j["left_eigenmatrices"] = left;
    return j;
}

nlohmann::json gate_plan_to_json(const GatePlan& plan) {
    nlohmann::json j;
    nlohmann::json target = nlohmann::json::array();
    for (int i = 0; i < 3; ++i) target.push_back(complex_to_json(plan.target(i)));
    j["target"] = target;
    j["gamma_rad"] = plan.gamma;
    j["alpha_rad"] = plan.alpha;
    j["beta_rad"] = plan.beta;
    j["delta_rad"] = plan.delta;
    j["gamma_prime_rad"] = plan.gamma_p;
    j["alpha_prime_rad"] = plan.alpha_p;
    j["beta_prime_rad"] = plan.beta_p;
    j["delta_prime_rad"] = plan.delta_p;
    j["phi_rad"] = plan.phi;
    j["phi_prime_rad"] = plan.phi_p;
    j["phi_l1_rad"] = plan.phi_l1;
    j["phi_l2_rad"] = plan.phi_l2;
    j["degenerate_branch"] = plan.degenerate_branch;
    return j;
}

nlohmann::json pair_record_to_json(const PairRecord& rec) {
    nlohmann::json j;
    j["index"] = rec.index;
    j["d0_far"] = rec.d0_f;
    j["d0_close"] = rec.d0_c;
    j["delta_a1"] = rec.delta_a1;
    j["delta_a2"] = rec.delta_a2;
    j["delta_aN"] = rec.delta_aN;
    j["crossing_times_s"] = rec.crossing_times;
    j["class"] = to_string(rec.cls);
    return j;
}

nlohmann::json quadrant_summary_to_json(const PhaseDiagram& pd) {
    nlohmann::json j;
    j["n_pairs"] = pd.records.size();
    j["tau1_s"] = pd.tau1;
    nlohmann::json quads = nlohmann::json::array();
    for (int q_aN = 0; q_aN < 2; ++q_aN) {
        for (int q_a1 = 0; q_a1 < 2; ++q_a1) {
            nlohmann::json q;
            q["delta_aN_sign"] = q_aN == 1 ? "+" : "-";
            q["delta_a1_sign"] = q_a1 == 1 ? "+" : "-";
            q["total"] = pd.stats.total(q_aN, q_a1);
            for (MeClass cls :
                 {MeClass::NoME, MeClass::ME, MeClass::MultiME, MeClass::Higher}) {
                q[std::string("count_") + to_string(cls)] =
                    pd.stats.counts[q_aN][q_a1][static_cast<int>(cls)];
                q[std::string("fraction_") + to_string(cls)] =
                    pd.stats.fraction(q_aN, q_a1, cls);
            }
            quads.push_back(q);
        }
    }
    j["quadrants"] = quads;
    return j;
}

nlohmann::json correlation_to_json(const CorrelationTable& table) {
    nlohmann::json j;
    j["n_states"] = table.n_states;
    j["corr_v0_aN"] = table.corr_v0_aN;
    j["corr_v2tau2_a2"] = table.corr_v2tau2_a2;
    j["corr_vtau1_a1"] = table.corr_vtau1_a1;
    return j;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t_seconds,distance,speed,geometric_speed\n";
    os << std::setprecision(17);
    for (std::size_t j = 0; j < traj.times.size(); ++j) {
        os << traj.times[j] << ',' << traj.distance[j] << ',' << traj.speed[j] << ','
           << traj.geometric_speed[j] << '\n';
    }
}

void write_phase_diagram_csv(std::ostream& os, const PhaseDiagram& pd) {
    os << "index,d0_far,d0_close,delta_a1,delta_a2,delta_aN,n_crossings,"
          "t_cross1_s,t_cross2_s,class\n";
    os << std::setprecision(17);
    for (const PairRecord& r : pd.records) {
        os << r.index << ',' << r.d0_f << ',' << r.d0_c << ',' << r.delta_a1 << ','
           << r.delta_a2 << ',' << r.delta_aN << ',' << r.crossing_times.size() << ',';
        os << (r.crossing_times.size() > 0 ? std::to_string(r.crossing_times[0]) : "");
        os << ',';
        os << (r.crossing_times.size() > 1 ? std::to_string(r.crossing_times[1]) : "");
        os << ',' << to_string(r.cls) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "s_rad,d0,d_tau2,d_tau1,v0,v_tau2,v_tau1,abs_a1,abs_a2,abs_aN,"
          "truncated_speed_rel_dev\n";
    os << std::setprecision(17);
    for (const SweepRow& r : rows) {
        os << r.s << ',' << r.d0 << ',' << r.d_tau2 << ',' << r.d_tau1 << ',' << r.v0 << ','
           << r.v_tau2 << ',' << r.v_tau1 << ',' << r.a1 << ',' << r.a2 << ',' << r.aN << ','
           << r.truncated_speed_rel_dev << '\n';
    }
}

void write_histogram_csv(std::ostream& os, const CrossingHistogram& h) {
    os << "bin_low_tau1,bin_high_tau1,count_first,count_second\n";
    os << std::setprecision(17);
    for (std::size_t b = 0; b + 1 < h.edges.size(); ++b) {
        os << h.edges[b] << ',' << h.edges[b + 1] << ',' << h.first[b] << ',' << h.second[b]
           << '\n';
    }
}

void write_counts_csv(std::ostream& os, const CountsTable& counts) {
    os << "setting,outcome,count\n";
    os << std::setprecision(17);
    for (std::size_t s = 0; s < counts.counts.size(); ++s) {
        for (int j = 0; j < 3; ++j) {
            os << s << ',' << j << ',' << counts.counts[s][j] << '\n';
        }
    }
}

}  // namespace mpemba
