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

#include <iosfwd>
#include <map>
#include <string>

#include <json.hpp>

#include "mpemba/gates.hpp"
#include "mpemba/mpemba.hpp"
#include "mpemba/tomography.hpp"

namespace mpemba {

inline constexpr const char* kVersion = "0.1.0";

// Leading comment block shared by every output file: one `# key=value` line
// per config entry plus the artifact version and (unless suppressed) a
// timestamp. Keys are emitted in sorted order for reproducible bytes.
void write_header(std::ostream& os, const std::map<std::string, std::string>& config,
                  bool with_timestamp);

// Eigenvalues as [re, im] pairs, matrices as nested arrays of [re, im].
nlohmann::json spectrum_to_json(const Spectrum& spec);

nlohmann::json gate_plan_to_json(const GatePlan& plan);

nlohmann::json pair_record_to_json(const PairRecord& rec);

nlohmann::json quadrant_summary_to_json(const PhaseDiagram& pd);

nlohmann::json correlation_to_json(const CorrelationTable& table);

// CSV bodies (headers first; callers emit the comment block beforehand).
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
void write_phase_diagram_csv(std::ostream& os, const PhaseDiagram& pd);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_histogram_csv(std::ostream& os, const CrossingHistogram& h);
void write_counts_csv(std::ostream& os, const CountsTable& counts);

}  // namespace mpemba
