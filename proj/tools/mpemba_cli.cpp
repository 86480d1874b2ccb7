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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpemba/io.hpp"

namespace {

using namespace mpemba;

constexpr double kKilohertzToRadPerSec = 2.0 * std::numbers::pi * 1e3;

struct RunConfig {
    double omega1_khz = 20.0;
    double omega2_ratio = 0.06;
    double gamma1_khz = 40.0;
    double gamma2_khz = 0.03;
    std::string jump_convention = "sqrt_rate";
    int norm_p = 2;
    double t_max = 0;       // seconds; 0 means 3 tau_1
    int n_points = 2000;
    std::uint64_t seed = 1;
    int threads = 0;        // 0 means hardware concurrency
    std::string out_dir = ".";
    bool no_timestamp = false;

    IonParams ion_params() const {
        IonParams p;
        p.omega1 = omega1_khz * kKilohertzToRadPerSec;
        p.omega2 = omega2_ratio * p.omega1;
        p.gamma1 = gamma1_khz * kKilohertzToRadPerSec;
        p.gamma2 = gamma2_khz * kKilohertzToRadPerSec;
        if (jump_convention == "sqrt_rate") {
            p.convention = JumpConvention::SqrtRate;
        } else if (jump_convention == "literal_rate") {
            p.convention = JumpConvention::LiteralRate;
        } else {
            throw CLI::ValidationError("jump_convention",
                                       "must be sqrt_rate or literal_rate");
        }
        return p;
    }

    GridSpec grid() const { return GridSpec{t_max, n_points}; }

    std::map<std::string, std::string> header_map(
        const std::map<std::string, std::string>& extra = {}) const {
        const IonParams p = ion_params();
        std::map<std::string, std::string> m = {
            {"omega1_rad_per_s", std::to_string(p.omega1)},
            {"omega2_rad_per_s", std::to_string(p.omega2)},
            {"gamma1_rad_per_s", std::to_string(p.gamma1)},
            {"gamma2_rad_per_s", std::to_string(p.gamma2)},
            {"jump_convention", jump_convention},
            {"norm_p", std::to_string(norm_p)},
            {"t_max_s", std::to_string(t_max)},
            {"n_points", std::to_string(n_points)},
            {"seed", std::to_string(seed)},
        };
        m.insert(extra.begin(), extra.end());
        return m;
    }
};

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    const auto path = std::filesystem::path(cfg.out_dir) / name;
    std::ofstream os(path);
    if (!os) {
        throw std::runtime_error("cannot open output file: " + path.string());
    }
    return os;
}

void emit(const RunConfig& cfg, const std::string& name, const nlohmann::json& j,
          const std::map<std::string, std::string>& extra = {}) {
    auto os = open_output(cfg, name);
    write_header(os, cfg.header_map(extra), !cfg.no_timestamp);
    os << j.dump(2) << "\n";
    std::cout << "wrote " << name << "\n";
}

Spectrum model_spectrum(const RunConfig& cfg) {
    auto [h, jumps] = build_ion_model(cfg.ion_params());
    return decompose(build_liouvillian(h, jumps));
}

Vector3 parse_target(const std::string& csv) {
    std::vector<double> vals;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        vals.push_back(std::stod(tok));
    }
    Vector3 t;
    if (vals.size() == 3) {
        t << vals[0], vals[1], vals[2];
    } else if (vals.size() == 6) {
        // Interleaved re,im per amplitude.
        t << dcomplex(vals[0], vals[1]), dcomplex(vals[2], vals[3]),
            dcomplex(vals[4], vals[5]);
    } else {
        throw CLI::ValidationError("--target", "expects 3 (real) or 6 (re,im) values");
    }
    const double n = t.norm();
    if (n < 1e-12) {
        throw CLI::ValidationError("--target", "must be nonzero");
    }
    return t / n;
}

int cmd_spectrum(const RunConfig& cfg) {
    emit(cfg, "spectrum.json", spectrum_to_json(model_spectrum(cfg)));
    return 0;
}

int cmd_trajectory(const RunConfig& cfg, double s, bool have_s2, double s2) {
    Spectrum spec = model_spectrum(cfg);
    const StateFamilyContext ctx = state_family_context(spec);
    const auto run_one = [&](double angle, const std::string& name) {
        const CMatrix rho = pure_state_density(rotated_state(ctx, angle));
        const Trajectory traj = trajectory(spec, rho, cfg.grid(), cfg.norm_p);
        auto os = open_output(cfg, name);
        write_header(os, cfg.header_map({{"s_rad", std::to_string(angle)}}),
                     !cfg.no_timestamp);
        write_trajectory_csv(os, traj);
        std::cout << "wrote " << name << "\n";
    };
    run_one(s, "trajectory.csv");
    if (have_s2) run_one(s2, "trajectory_s2.csv");
    return 0;
}

int cmd_sweep_s(const RunConfig& cfg, int n_angles) {
    Spectrum spec = model_spectrum(cfg);
    const StateFamilyContext ctx = state_family_context(spec);
    std::vector<double> s_grid(n_angles);
    for (int k = 0; k < n_angles; ++k) {
        s_grid[k] = std::numbers::pi * k / (n_angles - 1);
    }
    const auto rows = s_sweep(spec, ctx, s_grid, cfg.norm_p);
    auto os = open_output(cfg, "sweep.csv");
    write_header(os,
                 cfg.header_map({{"n_angles", std::to_string(n_angles)},
                                 {"s_star_rad", std::to_string(ctx.s_star)}}),
                 !cfg.no_timestamp);
    write_sweep_csv(os, rows);
    std::cout << "wrote sweep.csv\n";
    return 0;
}

int cmd_classify(const RunConfig& cfg, double s_f, double s_c, bool ground_c) {
    Spectrum spec = model_spectrum(cfg);
    const StateFamilyContext ctx = state_family_context(spec);
    CVector psi_c;
    if (ground_c) {
        psi_c = CVector::Zero(3);
        psi_c(0) = 1.0;
    } else {
        psi_c = rotated_state(ctx, s_c);
    }
    const PairRecord rec =
        classify_pair(spec, rotated_state(ctx, s_f), psi_c, cfg.grid(), cfg.norm_p);
    emit(cfg, "classify.json", pair_record_to_json(rec),
         {{"s_f_rad", std::to_string(s_f)},
          {"s_c_rad", ground_c ? "ground" : std::to_string(s_c)}});
    std::cout << "class=" << to_string(rec.cls)
              << " crossings=" << rec.crossing_times.size() << "\n";
    return 0;
}

PhaseDiagram run_phase_diagram(const RunConfig& cfg, int n_pairs, Spectrum& spec) {
    spec = model_spectrum(cfg);
    return phase_diagram(spec, n_pairs, cfg.seed, cfg.grid(), cfg.threads);
}

int cmd_phase_diagram(const RunConfig& cfg, int n_pairs) {
    Spectrum spec;
    const PhaseDiagram pd = run_phase_diagram(cfg, n_pairs, spec);
    const auto extra = std::map<std::string, std::string>{
        {"n_pairs", std::to_string(n_pairs)}};
    auto os = open_output(cfg, "phase_diagram.csv");
    write_header(os, cfg.header_map(extra), !cfg.no_timestamp);
    write_phase_diagram_csv(os, pd);
    std::cout << "wrote phase_diagram.csv\n";
    emit(cfg, "phase_diagram_summary.json", quadrant_summary_to_json(pd), extra);
    return 0;
}

int cmd_histogram(const RunConfig& cfg, int n_pairs, const std::string& cls_name) {
    Spectrum spec;
    const PhaseDiagram pd = run_phase_diagram(cfg, n_pairs, spec);
    const MeClass cls = cls_name == "multi_me" ? MeClass::MultiME : MeClass::ME;
    const CrossingHistogram h = crossing_histogram(pd, spec, cls);
    auto os = open_output(cfg, "histogram.csv");
    write_header(os,
                 cfg.header_map({{"n_pairs", std::to_string(n_pairs)},
                                 {"class", cls_name},
                                 {"n_records", std::to_string(h.n_records)},
                                 {"all_before_tau1", h.all_before_tau1 ? "1" : "0"}}),
                 !cfg.no_timestamp);
    write_histogram_csv(os, h);
    std::cout << "wrote histogram.csv\n";
    return 0;
}

int cmd_correlate(const RunConfig& cfg, int n_states) {
    const Spectrum spec = model_spectrum(cfg);
    const CorrelationTable table = speed_overlap_correlation(spec, n_states, cfg.seed);
    emit(cfg, "correlate.json", correlation_to_json(table),
         {{"n_states", std::to_string(n_states)}});
    return 0;
}

int cmd_decompose(const RunConfig& cfg, const std::string& target_csv) {
    const GatePlan plan = decompose_target(parse_target(target_csv));
    emit(cfg, "gate_plan.json", gate_plan_to_json(plan));
    return 0;
}

int cmd_tomo_sim(const RunConfig& cfg, const std::string& target_csv, long shots) {
    const Vector3 target = parse_target(target_csv);
    const CMatrix rho_true = pure_state_density(target);
    const TomographySetup setup = TomographySetup::standard();
    const CountsTable counts = simulate_tomography(rho_true, setup, shots, cfg.seed);
    {
        auto os = open_output(cfg, "counts.csv");
        write_header(os, cfg.header_map({{"shots", std::to_string(shots)}}),
                     !cfg.no_timestamp);
        write_counts_csv(os, counts);
        std::cout << "wrote counts.csv\n";
    }
    const MleResult mle = mle_reconstruct(counts, setup);
    nlohmann::json j;
    j["fidelity"] = fidelity(mle.rho, rho_true);
    j["iterations"] = mle.iterations;
    j["converged"] = mle.converged;
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 3; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 3; ++c) {
            row.push_back(
                nlohmann::json::array({mle.rho(r, c).real(), mle.rho(r, c).imag()}));
        }
        rows.push_back(row);
    }
    j["rho"] = rows;
    emit(cfg, "tomo.json", j, {{"shots", std::to_string(shots)}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for anomalous relaxation in a driven "
                 "dissipative qutrit"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.set_config("--config");
    app.add_option("--omega1_khz", cfg.omega1_khz, "Rabi frequency 0-1 (kHz)");
    app.add_option("--omega2_ratio", cfg.omega2_ratio, "Omega_2 / Omega_1");
    app.add_option("--gamma1_khz", cfg.gamma1_khz, "Decay rate 1->0 (kHz)");
    app.add_option("--gamma2_khz", cfg.gamma2_khz, "Decay rate 2->0 (kHz)");
    app.add_option("--jump_convention", cfg.jump_convention,
                   "sqrt_rate or literal_rate");
    app.add_option("--p", cfg.norm_p, "Schatten norm order (0 = operator norm)");
    app.add_option("--t-max", cfg.t_max, "Grid end time in seconds (0 = 3 tau_1)");
    app.add_option("--n-points", cfg.n_points, "Grid points");
    app.add_option("--seed", cfg.seed, "Base RNG seed");
    app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");
    app.add_option("--out", cfg.out_dir, "Output directory")
        ->envname("MPEMBA_OUT_DIR");
    app.add_flag("--no-timestamp", cfg.no_timestamp,
                 "Omit the timestamp header line (reproducible bytes)");

    auto* sc_spectrum = app.add_subcommand("spectrum", "Generator eigendecomposition");

    double s = 0, s2 = 0;
    auto* sc_traj = app.add_subcommand("trajectory", "Distance/speed curves");
    sc_traj->add_option("--s", s, "Family angle (rad)")->required();
    auto* opt_s2 = sc_traj->add_option("--s2", s2, "Second family angle (rad)");

    int n_angles = 201;
    auto* sc_sweep = app.add_subcommand("sweep-s", "Scan the rotated-state family");
    sc_sweep->add_option("--n", n_angles, "Number of angles in [0, pi]")
        ->check(CLI::Range(2, 100000));

    double s_f = 0, s_c = 0;
    bool ground_c = false;
    auto* sc_classify = app.add_subcommand("classify", "Classify one state pair");
    sc_classify->add_option("--s-f", s_f, "Angle of the farther state")->required();
    auto* opt_sc = sc_classify->add_option("--s-c", s_c, "Angle of the closer state");
    sc_classify->add_flag("--ground-c", ground_c, "Use |0> as the closer state")
        ->excludes(opt_sc);

    int n_pairs = 1000;
    auto* sc_phase = app.add_subcommand("phase-diagram", "Haar-pair Monte Carlo");
    sc_phase->add_option("--pairs", n_pairs, "Number of state pairs")->required();

    std::string cls_name = "me";
    auto* sc_hist = app.add_subcommand("histogram", "Crossing-time histogram");
    sc_hist->add_option("--pairs", n_pairs, "Number of state pairs");
    sc_hist->add_option("--class", cls_name, "me or multi_me")
        ->check(CLI::IsMember({"me", "multi_me"}));

    int n_states = 5000;
    auto* sc_corr = app.add_subcommand("correlate", "Speed/overlap correlations");
    sc_corr->add_option("--states", n_states, "Number of Haar states");

    std::string target_csv;
    auto* sc_decomp = app.add_subcommand("decompose", "Two-rotation preparation plan");
    sc_decomp->add_option("--target", target_csv, "Target amplitudes a,b,c")->required();

    std::string tomo_target = "1,0,0";
    long shots = 0;
    auto* sc_tomo = app.add_subcommand("tomo-sim", "Simulated tomography + MLE");
    sc_tomo->add_option("--target", tomo_target, "State to measure, a,b,c");
    sc_tomo->add_option("--shots", shots, "Shots per setting (0 = exact)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sc_spectrum->parsed()) return cmd_spectrum(cfg);
        if (sc_traj->parsed()) return cmd_trajectory(cfg, s, opt_s2->count() > 0, s2);
        if (sc_sweep->parsed()) return cmd_sweep_s(cfg, n_angles);
        if (sc_classify->parsed()) {
            if (!ground_c && opt_sc->count() == 0) {
                std::cerr << "error: classify needs --s-c or --ground-c\n";
                return 1;
            }
            return cmd_classify(cfg, s_f, s_c, ground_c);
        }
        if (sc_phase->parsed()) return cmd_phase_diagram(cfg, n_pairs);
        if (sc_hist->parsed()) return cmd_histogram(cfg, n_pairs, cls_name);
        if (sc_corr->parsed()) return cmd_correlate(cfg, n_states);
        if (sc_decomp->parsed()) return cmd_decompose(cfg, target_csv);
        if (sc_tomo->parsed()) return cmd_tomo_sim(cfg, tomo_target, shots);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
