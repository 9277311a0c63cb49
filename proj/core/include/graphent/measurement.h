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
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "graphent/circuit.h"
#include "graphent/graph.h"
#include "graphent/linalg.h"
#include "graphent/statevector.h"

namespace graphent {

inline constexpr std::size_t kDefaultShots = 8192;
inline constexpr std::size_t kDefaultTrajectories = 100;

/// Per-qubit readout flip and single-qubit depolarizing probabilities, plus
/// per-pair two-qubit depolarizing probabilities. Anything not set is 0.
class NoiseModel {
   public:
    double readout_flip(std::size_t q) const;
    double single_gate_error(std::size_t q) const;
    /// Symmetric in (a, b).
    double two_qubit_gate_error(std::size_t a, std::size_t b) const;

    /// Setters throw ValidationError for p outside [0, 1].
    void set_readout_flip(std::size_t q, double p);
    void set_single_gate_error(std::size_t q, double p);
    void set_two_qubit_gate_error(std::size_t a, std::size_t b, double p);

    bool empty() const;
    bool operator==(const NoiseModel&) const = default;

   private:
    std::vector<double> readout_;
    std::vector<double> gate1_;
    std::map<std::pair<std::size_t, std::size_t>, double> gate2_;
};

/// Calibration text: "readout.<q>=<p>", "gate1.<q>=<p>", "gate2.<i>_<j>=<p>",
/// '#' comments. gate2 may be listed in both directions; the two values must
/// then agree.
NoiseModel parse_calibration(std::string_view text);
NoiseModel load_calibration(const std::filesystem::path& path);

struct ShotCounts {
    std::size_t shots = 0;
    std::size_t n0 = 0;
    std::size_t n1 = 0;

    bool operator==(const ShotCounts&) const = default;
};

struct SampledEstimate {
    double value = 0.0;
    /// sqrt((1 - value^2) / shots)
    double std_error = 0.0;
    std::size_t shots = 0;
};

/// Unitary u with <psi|sigma^axis|psi> = <psi|u^dagger sigma^z u|psi>.
/// x: exp(i pi sigma^y / 4), y: exp(-i pi sigma^x / 4), z: identity.
Mat2 pre_rotation(Axis axis);

/// P(outcome 0) for qubit q measured along the axis.
double axis_p0(const StateVector& s, std::size_t q, Axis axis);

/// Draws shots outcomes with P(0) = p0, each then flipped with probability
/// readout_flip. Deterministic in seed.
ShotCounts sample_bernoulli(double p0, std::size_t shots, std::uint64_t seed,
                            double readout_flip = 0.0);

/// Rotates a copy of s for the axis and samples qubit q. With noise, outcomes
/// pass through the qubit's readout flip. Throws ValidationError for shots = 0.
ShotCounts sample_counts(const StateVector& s, std::size_t q, Axis axis, std::size_t shots,
                         std::uint64_t seed, const NoiseModel* noise = nullptr);

SampledEstimate estimate_pauli(const ShotCounts& c);

struct EntanglementEstimate {
    double value = 0.0;
    double error = 0.0;
    std::array<SampledEstimate, 3> axes{};  // x, y, z
};

/// E = 1/2 (1 - |m|) from sampled means m, with first-order error
/// 1/2 sqrt(sum (m_a s_a)^2) / |m|. When |m| is below the largest s_a the
/// gradient is unreliable and the error is 1/2 max s_a instead.
EntanglementEstimate combine_axis_estimates(const std::array<SampledEstimate, 3>& axes);

/// Samples each axis with its own stream: x uses seed, y seed + 1, z seed + 2.
EntanglementEstimate estimate_entanglement(const StateVector& s, std::size_t q,
                                           std::size_t shots_per_axis, std::uint64_t seed,
                                           const NoiseModel* noise = nullptr);

/// One stochastic Pauli trajectory of the circuit: after each single-qubit
/// gate a uniformly random X, Y or Z lands on its target with the qubit's
/// gate error; after each CP one of the 15 non-identity two-qubit Paulis lands
/// with the pair's error. Measurements are left alone.
Circuit gate_noise_channel(const Circuit& c, const NoiseModel& noise, std::uint64_t seed);

/// Prepares g under gate noise by averaging the per-axis readout
/// probabilities of qubit q over the given number of trajectories, then
/// samples shots_per_axis outcomes per axis (with readout noise) from the
/// averaged probabilities.
EntanglementEstimate estimate_entanglement_noisy(const Graph& g, const PrepParams& p,
                                                 std::size_t q, std::size_t shots_per_axis,
                                                 std::uint64_t seed, const NoiseModel& noise,
                                                 std::size_t trajectories,
                                                 std::size_t max_qubits = kDefaultMaxQubits);

}  // namespace graphent
