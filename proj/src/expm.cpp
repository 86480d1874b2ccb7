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

#include "mpemba/expm.hpp"

#include <Eigen/LU>
#include <array>
#include <cmath>

namespace mpemba {
namespace {

// Higham's theta values: the largest 1-norm for which the order-m diagonal
// Pade approximant attains double-precision accuracy.
constexpr double theta3 = 1.495585217958292e-2;
constexpr double theta5 = 2.539398330063230e-1;
constexpr double theta7 = 9.504178996162932e-1;
constexpr double theta9 = 2.097847961257068e0;
constexpr double theta13 = 5.371920351148152e0;

CMatrix pade_solve(const CMatrix& u, const CMatrix& v) {
    // (V - U) X = (V + U)
    return (v - u).partialPivLu().solve(v + u);
}

CMatrix pade_low_order(const CMatrix& a, const std::array<double, 14>& b, int order) {
    const Eigen::Index n = a.rows();
    const CMatrix id = CMatrix::Identity(n, n);
    const CMatrix a2 = a * a;
    CMatrix even = b[0] * id;
    CMatrix odd = b[1] * id;
    CMatrix pow = id;
    for (int k = 2; k <= order; k += 2) {
        pow = pow * a2;
        even += b[k] * pow;
        if (k + 1 <= order) odd += b[k + 1] * pow;
    }
    return pade_solve(a * odd, even);
}

}  // namespace

CMatrix expm(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("expm: matrix must be square");
    }
    const Eigen::Index n = a.rows();
    if (n == 0) return a;
    if (!a.allFinite()) {
        throw std::invalid_argument("expm: non-finite entries");
    }

    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();

    if (norm1 <= theta9) {
        if (norm1 <= theta3) {
            return pade_low_order(a, {120, 60, 12, 1}, 3);
        }
        if (norm1 <= theta5) {
            return pade_low_order(a, {30240, 15120, 3360, 420, 30, 1}, 5);
        }
        if (norm1 <= theta7) {
            return pade_low_order(a, {17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1}, 7);
        }
        return pade_low_order(
            a, {17643225600, 8821612800, 2075673600, 302702400, 30270240, 2162160, 110880, 3960, 90, 1}, 9);
    }

    // Order 13 with squaring.
    int squarings = 0;
    CMatrix as = a;
    if (norm1 > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
        as = a / std::pow(2.0, squarings);
    }

    static const std::array<double, 14> b = {
        64764752532480000., 32382376266240000., 7771770303897600., 1187353796428800.,
        129060195264000.,   10559470521600.,    670442572800.,     33522128640.,
        1323241920.,        40840800.,          960960.,           16380.,
        182.,               1.};

    const CMatrix id = CMatrix::Identity(n, n);
    const CMatrix a2 = as * as;
    const CMatrix a4 = a2 * a2;
    const CMatrix a6 = a2 * a4;
    const CMatrix u =
        as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    const CMatrix v =
        a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

    CMatrix r = pade_solve(u, v);
    for (int k = 0; k < squarings; ++k) {
        r = r * r;
    }
    return r;
}

}  // namespace mpemba
