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

#include "mpemba/kernels/dot.hpp"

namespace mpemba::kernels {

namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);

struct Dispatch {
    DotFn fn;
    const char* name;
};

Dispatch resolve() {
#ifdef MPEMBA_HAVE_AVX2_KERNEL
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return {dot_avx2, "avx2"};
    }
#endif
#ifdef MPEMBA_HAVE_NEON_KERNEL
    return {dot_neon, "neon"};
#endif
    return {dot_scalar, "scalar"};
}

const Dispatch& table() {
    static const Dispatch d = resolve();
    return d;
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
    return table().fn(a, b, n);
}

const char* active_variant() {
    return table().name;
}

}  // namespace mpemba::kernels
