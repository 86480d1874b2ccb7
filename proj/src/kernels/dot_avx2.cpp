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

// Compiled with -mavx2 -mfma; selected at runtime only when the CPU
// reports both features.

#include <immintrin.h>

#include "mpemba/kernels/dot.hpp"

namespace mpemba::kernels {

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double tail = 0;
    for (; i < n; ++i) tail += a[i] * b[i];
    return ((lanes[0] + lanes[2]) + (lanes[1] + lanes[3])) + tail;
}

}  // namespace mpemba::kernels
