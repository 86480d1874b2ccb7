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

#include "mpemba/ion_model.hpp"

namespace mpemba {

using Matrix3 = Eigen::Matrix3cd;
using Vector3 = Eigen::Vector3cd;

// Elementary qutrit gates: subspace phase gates, virtual Z gates and
// two-level rotations on the 0-1 and 0-2 transitions.
Matrix3 gate_p01(double x);
Matrix3 gate_p02(double x);
Matrix3 gate_z01(double x);
Matrix3 gate_z02(double x);
Matrix3 gate_r01(double theta, double phi);
Matrix3 gate_r02(double theta, double phi);

// Two physical rotations plus virtual phase gates preparing an arbitrary
// qutrit target from |0>. The phase gates are commuted through, leaving
// only R01(gamma, phi) R02(gamma', phi') to implement; the accumulated
// per-level phases feed the dynamics and tomography adjustments.
struct GatePlan {
    Vector3 target;
    double gamma = 0, alpha = 0, beta = 0, delta = 0;      // 0-1 block
    double gamma_p = 0, alpha_p = 0, beta_p = 0, delta_p = 0;  // 0-2 block
    double phi = 0, phi_p = 0;      // physical rotation phases
    double phi_l1 = 0, phi_l2 = 0;  // accumulated phases for tomography/dynamics
    bool degenerate_branch = false; // target proportional to |2>; single R02(pi,.)
};

GatePlan decompose_target(const Vector3& target);

// Full six-gate product P01 P02 Z01 Z02 R01 R02.
Matrix3 six_gate_product(const GatePlan& plan);

// six_gate_product(plan) * |0>; equals plan.target within 1e-10.
Vector3 prepared_state(const GatePlan& plan);

// What the hardware actually applies: R01(gamma, phi) R02(gamma', phi') |0>.
// Relates to the target by the accumulated phase gate.
Vector3 physical_state(const GatePlan& plan);

// Relative part of the accumulated phase gate:
// diag(1, e^{-i phi_l1}, e^{-i phi_l2}); target = (phase) * D * physical.
Matrix3 accumulated_phase(const GatePlan& plan);

// Liouvillian in the physical frame: drive phases absorb the accumulated
// state-preparation phases (Omega_a picks up e^{-i phi_la}).
Superoperator adjusted_liouvillian(const IonParams& p, const GatePlan& plan);

}  // namespace mpemba
