// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "graphent/linalg.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "graphent/error.h"

namespace graphent {

Mat2 Mat2::adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
    double d = 0.0;
    for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a.m[k] - b.m[k]));
    return d;
}

double unitarity_defect(const Mat2& u) { return max_abs_diff(u.adjoint() * u, Mat2::identity()); }

char to_char(Axis axis) {
    switch (axis) {
        case Axis::X: return 'x';
        case Axis::Y: return 'y';
        case Axis::Z: return 'z';
    }
    return '?';
}

Axis parse_axis(char c) {
    switch (c) {
        case 'x': case 'X': return Axis::X;
        case 'y': case 'Y': return Axis::Y;
        case 'z': case 'Z': return Axis::Z;
    }
    throw ValidationError(std::string("unknown axis '") + c + "'");
}

const Mat2& pauli(Axis axis) {
    static const Mat2 x{{0.0, 1.0, 1.0, 0.0}};
    static const Mat2 y{{0.0, Complex(0, -1), Complex(0, 1), 0.0}};
    static const Mat2 z{{1.0, 0.0, 0.0, -1.0}};
    switch (axis) {
        case Axis::X: return x;
        case Axis::Y: return y;
        case Axis::Z: break;
    }
    return z;
}

Mat2 rx(double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return {{c, Complex(0, -s), Complex(0, -s), c}};
}

Mat2 ry(double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return {{c, -s, s, c}};
}

Mat2 rz(double angle) {
    return {{std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2)}};
}

Mat2 hadamard() {
    const double r = std::numbers::sqrt2 / 2;
    return {{r, r, r, -r}};
}

Mat2 phase(double phi) { return {{1.0, 0.0, 0.0, std::polar(1.0, phi)}}; }

}  // namespace graphent
