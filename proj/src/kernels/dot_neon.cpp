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

#include <arm_neon.h>

#include "mpemba/kernels/dot.hpp"

namespace mpemba::kernels {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double s0 = vgetq_lane_f64(acc0, 0), s1 = vgetq_lane_f64(acc0, 1);
    double s2 = vgetq_lane_f64(acc1, 0), s3 = vgetq_lane_f64(acc1, 1);
    double tail = 0;
    for (; i < n; ++i) tail += a[i] * b[i];
    return ((s0 + s2) + (s1 + s3)) + tail;
}

}  // namespace mpemba::kernels
