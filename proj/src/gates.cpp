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

#include "mpemba/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mpemba {

Matrix3 gate_p01(double x) {
    Matrix3 g = Matrix3::Identity();
    g(0, 0) = g(1, 1) = std::exp(ii * x);
    return g;
}

Matrix3 gate_p02(double x) {
    Matrix3 g = Matrix3::Identity();
    g(0, 0) = g(2, 2) = std::exp(ii * x);
    return g;
}

Matrix3 gate_z01(double x) {
    Matrix3 g = Matrix3::Identity();
    g(0, 0) = std::exp(-ii * x);
    g(1, 1) = std::exp(ii * x);
    return g;
}

Matrix3 gate_z02(double x) {
    Matrix3 g = Matrix3::Identity();
    g(0, 0) = std::exp(-ii * x);
    g(2, 2) = std::exp(ii * x);
    return g;
}

Matrix3 gate_r01(double theta, double phi) {
    Matrix3 g = Matrix3::Identity();
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    g(0, 0) = c;
    g(1, 1) = c;
    g(0, 1) = -ii * std::exp(-ii * phi) * s;
    g(1, 0) = -ii * std::exp(ii * phi) * s;
    return g;
}

Matrix3 gate_r02(double theta, double phi) {
    Matrix3 g = Matrix3::Identity();
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    g(0, 0) = c;
    g(2, 2) = c;
    g(0, 2) = -ii * std::exp(-ii * phi) * s;
    g(2, 0) = -ii * std::exp(ii * phi) * s;
    return g;
}

namespace {

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

}  // namespace

GatePlan decompose_target(const Vector3& target) {
    if (std::abs(target.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("decompose_target: target must be a unit vector");
    }
    const dcomplex a = target(0), b = target(1), c = target(2);
    const double r2 = std::norm(a) + std::norm(b);

    GatePlan plan;
    plan.target = target;

    if (r2 < 1e-14) {
        // Target is |2> up to phase: the 0-1 block degenerates to the
        // identity and a single R02(pi, .) suffices.
        plan.degenerate_branch = true;
        plan.gamma = plan.alpha = plan.beta = plan.delta = 0;
        plan.gamma_p = std::numbers::pi;
        plan.alpha_p = 0.5 * std::numbers::pi;
        plan.beta_p = 0.5 * std::arg(c);
        plan.delta_p = -plan.alpha_p + std::numbers::pi - plan.beta_p;
    } else {
        const double r = std::sqrt(r2);
        const dcomplex m11 = a / r, m21 = b / r, m22 = -std::conj(a) / r;
        plan.gamma = 2.0 * clamped_acos(std::abs(m11));
        plan.alpha = 0.5 * (std::arg(m11) + std::arg(m22));
        plan.beta = 0.5 * (std::arg(m21) - std::arg(m11));
        plan.delta = -plan.alpha + std::arg(m22) - plan.beta;

        const dcomplex mm11 = dcomplex(r, 0), mm31 = c, mm33 = dcomplex(-r, 0);
        plan.gamma_p = 2.0 * clamped_acos(std::abs(mm11));
        plan.alpha_p = 0.5 * (std::arg(mm11) + std::arg(mm33));
        plan.beta_p = 0.5 * (std::arg(mm31) - std::arg(mm11));
        plan.delta_p = -plan.alpha_p + std::arg(mm33) - plan.beta_p;
    }

    plan.phi = plan.alpha_p - (plan.beta_p + plan.delta_p) + 0.5 * std::numbers::pi -
               2.0 * plan.delta;
    plan.phi_p = 0.5 * std::numbers::pi - 2.0 * plan.delta_p;
    plan.phi_l1 =
        plan.alpha_p - 2.0 * (plan.beta + plan.delta) - (plan.beta_p + plan.delta_p);
    plan.phi_l2 =
        plan.alpha - 2.0 * (plan.beta_p + plan.delta_p) - (plan.beta + plan.delta);
    return plan;
}

Matrix3 six_gate_product(const GatePlan& plan) {
    return gate_p01(plan.alpha) * gate_p02(plan.alpha_p) *
           gate_z01(plan.beta + plan.delta) * gate_z02(plan.beta_p + plan.delta_p) *
           gate_r01(plan.gamma, plan.phi) * gate_r02(plan.gamma_p, plan.phi_p);
}

Vector3 prepared_state(const GatePlan& plan) {
    return six_gate_product(plan).col(0);
}

Vector3 physical_state(const GatePlan& plan) {
    return (gate_r01(plan.gamma, plan.phi) * gate_r02(plan.gamma_p, plan.phi_p)).col(0);
}

Matrix3 accumulated_phase(const GatePlan& plan) {
    Matrix3 d = Matrix3::Identity();
    d(1, 1) = std::exp(-ii * plan.phi_l1);
    d(2, 2) = std::exp(-ii * plan.phi_l2);
    return d;
}

Superoperator adjusted_liouvillian(const IonParams& p, const GatePlan& plan) {
    IonParams adjusted = p;
    adjusted.phi1 = p.phi1 - plan.phi_l1;
    adjusted.phi2 = p.phi2 - plan.phi_l2;
    auto [h, jumps] = build_ion_model(adjusted);
    return build_liouvillian(h, jumps);
}

}  // namespace mpemba
