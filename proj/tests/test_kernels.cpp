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

#include <doctest.h>

#include <Eigen/Dense>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "mpemba/kernels/dot.hpp"

using mpemba::kernels::active_variant;
using mpemba::kernels::dot;
using mpemba::kernels::dot_scalar;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = g(rng);
    return v;
}

const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 15, 16, 63, 64, 128, 1000, 4097};

}  // namespace

TEST_CASE("scalar kernel against Eigen") {
    for (std::size_t n : kLengths) {
        const auto a = random_vec(n, 2 * n + 1);
        const auto b = random_vec(n, 2 * n + 2);
        const double ref =
            n == 0 ? 0.0
                   : Eigen::Map<const Eigen::VectorXd>(a.data(), n)
                         .dot(Eigen::Map<const Eigen::VectorXd>(b.data(), n));
        const double got = dot_scalar(a.data(), b.data(), n);
        CHECK(std::abs(got - ref) <= 1e-12 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("dispatched kernel equals scalar reference") {
    for (std::size_t n : kLengths) {
        const auto a = random_vec(n, 3 * n + 1);
        const auto b = random_vec(n, 3 * n + 2);
        const double ref = dot_scalar(a.data(), b.data(), n);
        const double got = dot(a.data(), b.data(), n);
        // FMA contraction may shave one rounding per lane; allow a hair.
        CHECK(std::abs(got - ref) <= 1e-12 * (1.0 + std::abs(ref)));
    }
}

#ifdef MPEMBA_HAVE_AVX2_KERNEL
TEST_CASE("avx2 kernel equivalence") {
    if (std::string(active_variant()) != "avx2") {
        return;  // binary built with AVX2 support but CPU lacks it
    }
    for (std::size_t n : kLengths) {
        const auto a = random_vec(n, 5 * n + 1);
        const auto b = random_vec(n, 5 * n + 2);
        const double ref = dot_scalar(a.data(), b.data(), n);
        const double got = mpemba::kernels::dot_avx2(a.data(), b.data(), n);
        CHECK(std::abs(got - ref) <= 1e-12 * (1.0 + std::abs(ref)));
    }
}
#endif

TEST_CASE("active variant reports a known kernel") {
    const std::string v = active_variant();
    CHECK((v == "scalar" || v == "avx2" || v == "neon"));
}
