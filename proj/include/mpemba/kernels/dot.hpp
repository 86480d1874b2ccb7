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

#include <cstddef>

namespace mpemba::kernels {

// Real dot product sum_i a[i]*b[i]. This is the inner loop of the
// phase-diagram Monte Carlo: Hilbert-Schmidt distance curves reduce to
// Hermitian quadratic forms, evaluated as real dot products against
// precomputed per-time-point profiles.
//
// `dot` dispatches once (at first call) to the best variant the CPU
// supports; the scalar kernel is the reference the SIMD variants are
// equivalence-tested against.
double dot(const double* a, const double* b, std::size_t n);

double dot_scalar(const double* a, const double* b, std::size_t n);
#ifdef MPEMBA_HAVE_AVX2_KERNEL
double dot_avx2(const double* a, const double* b, std::size_t n);
#endif
#ifdef MPEMBA_HAVE_NEON_KERNEL
double dot_neon(const double* a, const double* b, std::size_t n);
#endif

// Name of the variant `dot` resolves to ("scalar", "avx2", "neon").
const char* active_variant();

}  // namespace mpemba::kernels
