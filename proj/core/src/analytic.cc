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
#include "graphent/analytic.h"

#include <algorithm>
#include <cmath>

namespace graphent {

double PauliMeans::norm() const { return std::sqrt(x * x + y * y + z * z); }

Complex z_factor(std::size_t degree, double phi, double alpha, double theta) {
    const Complex base(std::cos(phi / 2), std::sin(phi / 2) * std::cos(theta));
    Complex power = 1.0;
    for (std::size_t k = 0; k < degree; ++k) power *= base;
    return std::polar(1.0, -(alpha + phi * static_cast<double>(degree) / 2)) * power;
}

PauliMeans analytic_pauli_means(std::size_t degree, double phi, double alpha, double theta) {
    const Complex z = z_factor(degree, phi, alpha, theta);
    const double s = std::sin(theta);
    return {s * z.real(), -s * z.imag(), std::cos(theta)};
}

double analytic_entanglement(std::size_t degree, double phi, double theta) {
    if (degree == 0) return 0.0;
    const double c_half = std::cos(phi / 2);
    const double s_half = std::sin(phi / 2);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double base = c_half * c_half + s_half * s_half * c * c;
    double power = 1.0;
    for (std::size_t k = 0; k < degree; ++k) power *= base;
    const double radicand = s * s * power + c * c;
    return std::clamp(0.5 - 0.5 * std::sqrt(radicand), 0.0, 0.5);
}

AnalyticRecord analytic_record(std::size_t degree, const PrepParams& p) {
    AnalyticRecord r;
    r.degree = degree;
    r.phi = p.phi();
    r.alpha = p.alpha();
    r.theta = p.theta();
    r.z = z_factor(degree, r.phi, r.alpha, r.theta);
    const double s = std::sin(r.theta);
    r.means = {s * r.z.real(), -s * r.z.imag(), std::cos(r.theta)};
    r.mean_spin_norm = r.means.norm();
    r.entanglement = 0.5 * (1.0 - r.mean_spin_norm);
    return r;
}

}  // namespace graphent
