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
#include "graphent/statevector.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "graphent/error.h"

namespace graphent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnitaryTolerance = 1e-10;

double wrap(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    // fmod of a tiny negative number can round up to exactly one period.
    if (r >= period) r = 0.0;
    return r;
}

template <typename T>
T to_little_endian(T v) {
    if constexpr (std::endian::native == std::endian::big) {
        auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
        std::reverse(bytes.begin(), bytes.end());
        return std::bit_cast<T>(bytes);
    }
    return v;
}

}  // namespace

PrepParams::PrepParams(double phi, double alpha, double theta) {
    if (!std::isfinite(phi) || !std::isfinite(alpha) || !std::isfinite(theta)) {
        throw ValidationError("preparation angles must be finite");
    }
    if (theta < 0.0 || theta > std::numbers::pi) {
        theta = wrap(theta, kTwoPi);
        if (theta > std::numbers::pi) {
            // cos(t/2)|0> + e^{ia} sin(t/2)|1> = -(cos(t'/2)|0> + e^{i(a+pi)} sin(t'/2)|1>)
            // with t' = 2 pi - t.
            theta = kTwoPi - theta;
            alpha += std::numbers::pi;
        }
    }
    if (phi < 0.0 || phi > kTwoPi) phi = wrap(phi, kTwoPi);
    if (alpha < 0.0 || alpha >= kTwoPi) alpha = wrap(alpha, kTwoPi);
    phi_ = phi;
    alpha_ = alpha;
    theta_ = theta;
}

StateVector::StateVector(std::size_t n_qubits, std::size_t max_qubits) : n_qubits_(n_qubits) {
    const std::size_t cap = std::min(max_qubits, kAbsoluteMaxQubits);
    if (n_qubits > cap) {
        throw ResourceError(std::to_string(n_qubits) + " qubits exceeds the statevector cap of " +
                            std::to_string(cap));
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw ValidationError("amplitude count must be a power of two");
    }
    StateVector s;
    s.n_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

void StateVector::check_qubit(std::size_t q) const {
    if (q >= n_qubits_) {
        throw ValidationError("qubit " + std::to_string(q) + " out of range for " +
                              std::to_string(n_qubits_) + " qubits");
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amplitudes_) total += std::norm(a);
    return total;
}

void StateVector::apply_single_qubit(std::size_t q, const Mat2& u) {
    check_qubit(q);
    if (unitarity_defect(u) > kUnitaryTolerance) throw ValidationError("gate matrix is not unitary");
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t dim = amplitudes_.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i0 = block; i0 < block + stride; ++i0) {
            const std::size_t i1 = i0 + stride;
            const Complex v0 = amplitudes_[i0];
            const Complex v1 = amplitudes_[i1];
            amplitudes_[i0] = u(0, 0) * v0 + u(0, 1) * v1;
            amplitudes_[i1] = u(1, 0) * v0 + u(1, 1) * v1;
        }
    }
}

void StateVector::apply_controlled_phase(std::size_t i, std::size_t j, double phi) {
    check_qubit(i);
    check_qubit(j);
    if (i == j) throw ValidationError("controlled phase needs two distinct qubits");
    const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
    const Complex factor = std::polar(1.0, phi);
    for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
        if ((k & mask) == mask) amplitudes_[k] *= factor;
    }
}

double StateVector::pauli_expectation(std::size_t q, Axis axis) const {
    check_qubit(q);
    const Mat2& p = pauli(axis);
    const std::size_t stride = std::size_t{1} << q;
    Complex acc{};
    for (std::size_t block = 0; block < amplitudes_.size(); block += 2 * stride) {
        for (std::size_t i0 = block; i0 < block + stride; ++i0) {
            const Complex v0 = amplitudes_[i0];
            const Complex v1 = amplitudes_[i0 + stride];
            acc += std::conj(v0) * (p(0, 0) * v0 + p(0, 1) * v1) +
                   std::conj(v1) * (p(1, 0) * v0 + p(1, 1) * v1);
        }
    }
    if (std::abs(acc.imag()) >= 1e-10) throw Error("Pauli expectation has a non-real part");
    return acc.real();
}

Mat2 StateVector::reduced_density_matrix(std::size_t q) const {
    check_qubit(q);
    const std::size_t stride = std::size_t{1} << q;
    double p0 = 0.0, p1 = 0.0;
    Complex coherence{};
    for (std::size_t block = 0; block < amplitudes_.size(); block += 2 * stride) {
        for (std::size_t i0 = block; i0 < block + stride; ++i0) {
            const Complex v0 = amplitudes_[i0];
            const Complex v1 = amplitudes_[i0 + stride];
            p0 += std::norm(v0);
            p1 += std::norm(v1);
            coherence += v0 * std::conj(v1);
        }
    }
    return {{p0, coherence, std::conj(coherence), p1}};
}

double StateVector::exact_entanglement(std::size_t q) const {
    const double x = pauli_expectation(q, Axis::X);
    const double y = pauli_expectation(q, Axis::Y);
    const double z = pauli_expectation(q, Axis::Z);
    return 0.5 * (1.0 - std::sqrt(x * x + y * y + z * z));
}

double StateVector::oracle_entanglement(std::size_t q) const {
    const Mat2 rho = reduced_density_matrix(q);
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double half_gap = 0.5 * (a - d);
    const double lambda_max = 0.5 * (a + d) + std::sqrt(half_gap * half_gap + std::norm(rho(0, 1)));
    return 1.0 - lambda_max;
}

double StateVector::marginal_p0(std::size_t q) const {
    return reduced_density_matrix(q)(0, 0).real();
}

StateVector init_product_state(std::size_t n, const PrepParams& p, std::size_t max_qubits) {
    if (n == 0) throw ValidationError("product state needs at least one qubit");
    StateVector s(n, max_qubits);
    const Complex c0 = std::cos(p.theta() / 2);
    const Complex c1 = std::polar(std::sin(p.theta() / 2), p.alpha());
    auto& amps = s.amplitudes_;
    // amplitude(k) = c0^(#zeros in k) * c1^(#ones in k), built one qubit at a time.
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t width = std::size_t{1} << q;
        for (std::size_t k = 0; k < width; ++k) {
            amps[k + width] = amps[k] * c1;
            amps[k] *= c0;
        }
    }
    return s;
}

StateVector prepare_graph_state(const Graph& g, const PrepParams& p, std::size_t max_qubits) {
    StateVector s = init_product_state(g.n_vertices(), p, max_qubits);
    for (const auto& [a, b] : g.edges()) s.apply_controlled_phase(a, b, p.phi());
    return s;
}

void write_binary(const StateVector& s, std::ostream& out) {
    const auto n = to_little_endian(static_cast<std::uint32_t>(s.n_qubits()));
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    for (const auto& a : s.amplitudes()) {
        const double parts[2] = {to_little_endian(a.real()), to_little_endian(a.imag())};
        out.write(reinterpret_cast<const char*>(parts), sizeof parts);
    }
}

StateVector read_binary(std::istream& in, std::size_t max_qubits) {
    std::uint32_t n = 0;
    if (!in.read(reinterpret_cast<char*>(&n), sizeof n)) throw ParseError("truncated statevector dump");
    n = to_little_endian(n);
    StateVector s(n, max_qubits);
    for (auto& a : s.amplitudes_) {
        double parts[2];
        if (!in.read(reinterpret_cast<char*>(parts), sizeof parts)) {
            throw ParseError("truncated statevector dump");
        }
        a = {to_little_endian(parts[0]), to_little_endian(parts[1])};
    }
    return s;
}

}  // namespace graphent
