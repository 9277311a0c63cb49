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

#include <cstddef>

#include "graphent/linalg.h"
#include "graphent/statevector.h"

namespace graphent {

struct PauliMeans {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

/// z = e^{-i(alpha + phi n / 2)} (cos(phi/2) + i sin(phi/2) cos(theta))^n.
///
/// The power is taken by repeated multiplication so that a vanishing base
/// (phi = pi, theta = pi/2) yields an exact zero for every n >= 1.
Complex z_factor(std::size_t degree, double phi, double alpha, double theta);

/// Closed-form mean spin of a vertex of the given degree:
/// (sin(theta) Re z, -sin(theta) Im z, cos(theta)).
PauliMeans analytic_pauli_means(std::size_t degree, double phi, double alpha, double theta);

/// Geometric measure of entanglement of a vertex of the given degree with the
/// rest of the graph state:
///
///     1/2 - 1/2 sqrt(sin^2(theta) (cos^2(phi/2) + sin^2(phi/2) cos^2(theta))^n + cos^2(theta))
///
/// Independent of alpha, so alpha is not a parameter. Degree 0 returns exactly 0.
double analytic_entanglement(std::size_t degree, double phi, double theta);

/// Everything above for one parameter point.
struct AnalyticRecord {
    std::size_t degree = 0;
    double phi = 0.0;
    double alpha = 0.0;
    double theta = 0.0;
    Complex z;
    PauliMeans means;
    double mean_spin_norm = 0.0;
    double entanglement = 0.0;
};

AnalyticRecord analytic_record(std::size_t degree, const PrepParams& p);

}  // namespace graphent
