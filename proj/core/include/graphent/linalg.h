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
#pragma once

#include <array>
#include <complex>

namespace graphent {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
struct Mat2 {
    std::array<Complex, 4> m{};

    Complex& operator()(int r, int c) { return m[2 * r + c]; }
    const Complex& operator()(int r, int c) const { return m[2 * r + c]; }

    static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

    Mat2 adjoint() const;
    Complex trace() const { return m[0] + m[3]; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Max-abs entry of a - b.
double max_abs_diff(const Mat2& a, const Mat2& b);

/// Max-abs entry of u^dagger u - I.
double unitarity_defect(const Mat2& u);

enum class Axis { X, Y, Z };

char to_char(Axis axis);
Axis parse_axis(char c);

const Mat2& pauli(Axis axis);

/// Rotation conventions: R_a(t) = exp(-i t sigma^a / 2).
Mat2 rx(double angle);
Mat2 ry(double angle);
Mat2 rz(double angle);
Mat2 hadamard();
/// diag(1, e^{i phi})
Mat2 phase(double phi);

}  // namespace graphent
