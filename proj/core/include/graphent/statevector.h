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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "graphent/graph.h"
#include "graphent/linalg.h"

namespace graphent {

/// Default cap on statevector width: 2^24 amplitudes, 256 MiB.
inline constexpr std::size_t kDefaultMaxQubits = 24;

/// Hard ceiling regardless of configuration (index type is 64-bit but
/// allocations beyond this are never reasonable on a desk machine).
inline constexpr std::size_t kAbsoluteMaxQubits = 34;

/// Gate angle phi and one-qubit state angles (alpha, theta) of
/// cos(theta/2)|0> + e^{i alpha} sin(theta/2)|1>.
///
/// Construction reduces to theta in [0, pi], phi in [0, 2 pi], alpha in [0, 2 pi).
/// A theta outside [0, pi] is reflected (theta -> 2 pi - theta) and the
/// reflection's relative sign is absorbed into alpha (+pi). Values already in
/// range are stored bit-for-bit.
class PrepParams {
   public:
    PrepParams() = default;
    PrepParams(double phi, double alpha, double theta);

    double phi() const { return phi_; }
    double alpha() const { return alpha_; }
    double theta() const { return theta_; }

    bool operator==(const PrepParams&) const = default;

   private:
    double phi_ = 0.0;
    double alpha_ = 0.0;
    double theta_ = 0.0;
};

/// Dense pure state of n qubits. Bit k of an amplitude index is qubit k
/// (qubit 0 is the least significant bit).
class StateVector {
   public:
    /// |0...0> on n qubits. Throws ResourceError if n > max_qubits.
    explicit StateVector(std::size_t n_qubits, std::size_t max_qubits = kDefaultMaxQubits);

    /// Takes ownership of amplitudes; size must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t size() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const;

    /// Applies u to qubit q. Throws ValidationError if u is not unitary
    /// within 1e-10 or q is out of range.
    void apply_single_qubit(std::size_t q, const Mat2& u);

    /// Multiplies every amplitude with bits i and j both set by e^{i phi}.
    void apply_controlled_phase(std::size_t i, std::size_t j, double phi);

    /// Exact <psi| sigma^axis_q |psi>.
    double pauli_expectation(std::size_t q, Axis axis) const;

    /// Partial trace over every qubit except q.
    Mat2 reduced_density_matrix(std::size_t q) const;

    /// 1/2 (1 - |<sigma_q>|) from exact Pauli means.
    double exact_entanglement(std::size_t q) const;

    /// 1 - lambda_max(rho_q): the largest Schmidt coefficient squared of the
    /// q | rest split, i.e. the maximal overlap with a product state.
    double oracle_entanglement(std::size_t q) const;

    /// Probability that qubit q reads 0 in the standard basis.
    double marginal_p0(std::size_t q) const;

   private:
    friend StateVector init_product_state(std::size_t, const PrepParams&, std::size_t);
    friend StateVector read_binary(std::istream&, std::size_t);

    StateVector() = default;
    void check_qubit(std::size_t q) const;

    std::size_t n_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// Tensor product of n copies of cos(theta/2)|0> + e^{i alpha} sin(theta/2)|1>.
StateVector init_product_state(std::size_t n, const PrepParams& p,
                               std::size_t max_qubits = kDefaultMaxQubits);

/// init_product_state followed by CP(phi) on every edge of g.
StateVector prepare_graph_state(const Graph& g, const PrepParams& p,
                                std::size_t max_qubits = kDefaultMaxQubits);

/// Debug dump: u32 qubit count, then 2^n (real, imag) little-endian doubles.
void write_binary(const StateVector& s, std::ostream& out);
StateVector read_binary(std::istream& in, std::size_t max_qubits = kDefaultMaxQubits);

}  // namespace graphent
