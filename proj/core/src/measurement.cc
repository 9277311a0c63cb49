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
#include "graphent/measurement.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <tuple>

#include "graphent/error.h"

namespace graphent {

namespace {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits; unlike the std
/// distributions this is identical across standard library implementations.
double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("probability " + std::to_string(p) + " outside [0, 1]");
    }
}

double lookup(const std::vector<double>& v, std::size_t q) { return q < v.size() ? v[q] : 0.0; }

void store(std::vector<double>& v, std::size_t q, double p) {
    check_probability(p);
    if (q >= v.size()) v.resize(q + 1, 0.0);
    v[q] = p;
}

constexpr GateKind kPauliKinds[4] = {GateKind::Measure /* identity, unused */, GateKind::X,
                                     GateKind::Y, GateKind::Z};

}  // namespace

double NoiseModel::readout_flip(std::size_t q) const { return lookup(readout_, q); }
double NoiseModel::single_gate_error(std::size_t q) const { return lookup(gate1_, q); }

double NoiseModel::two_qubit_gate_error(std::size_t a, std::size_t b) const {
    auto it = gate2_.find(std::minmax(a, b));
    return it == gate2_.end() ? 0.0 : it->second;
}

void NoiseModel::set_readout_flip(std::size_t q, double p) { store(readout_, q, p); }
void NoiseModel::set_single_gate_error(std::size_t q, double p) { store(gate1_, q, p); }

void NoiseModel::set_two_qubit_gate_error(std::size_t a, std::size_t b, double p) {
    check_probability(p);
    if (a == b) throw ValidationError("two-qubit error needs two distinct qubits");
    gate2_[std::minmax(a, b)] = p;
}

bool NoiseModel::empty() const {
    auto zero = [](double p) { return p == 0.0; };
    return std::all_of(readout_.begin(), readout_.end(), zero) &&
           std::all_of(gate1_.begin(), gate1_.end(), zero) &&
           std::all_of(gate2_.begin(), gate2_.end(), [](const auto& kv) { return kv.second == 0.0; });
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

template <typename T>
T parse_field(std::string_view tok, std::size_t line_no, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid " + what + " '" +
                         std::string(tok) + "'");
    }
    return value;
}

}  // namespace

NoiseModel parse_calibration(std::string_view text) {
    NoiseModel model;
    std::map<std::string, double> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const double p = parse_field<double>(trim(line.substr(eq + 1)), line_no, "probability");
        const auto dot = key.find('.');
        if (dot == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
        const std::string_view family = key.substr(0, dot);
        const std::string_view target = key.substr(dot + 1);

        std::size_t a = 0, b = 0;
        if (family == "readout" || family == "gate1") {
            a = parse_field<std::size_t>(target, line_no, "qubit index");
        } else if (family == "gate2") {
            const auto us = target.find('_');
            if (us == std::string_view::npos) {
                throw ParseError("line " + std::to_string(line_no) + ": expected gate2.<i>_<j>");
            }
            std::tie(a, b) = std::minmax(parse_field<std::size_t>(target.substr(0, us), line_no, "qubit index"),
                                         parse_field<std::size_t>(target.substr(us + 1), line_no, "qubit index"));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }

        // Directional duplicates (CX0_1, CX1_0) collapse onto one unordered pair.
        const std::string canonical = std::string(family) + "." + std::to_string(a) + "_" + std::to_string(b);
        if (auto [it, inserted] = seen.emplace(canonical, p); !inserted && it->second != p) {
            throw ValidationError("line " + std::to_string(line_no) + ": conflicting value for '" +
                                  std::string(key) + "'");
        }
        try {
            if (family == "readout") {
                model.set_readout_flip(a, p);
            } else if (family == "gate1") {
                model.set_single_gate_error(a, p);
            } else {
                model.set_two_qubit_gate_error(a, b, p);
            }
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return model;
}

NoiseModel load_calibration(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open calibration file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_calibration(buf.str());
}

Mat2 pre_rotation(Axis axis) {
    const double r = std::numbers::sqrt2 / 2;
    switch (axis) {
        case Axis::X:  // exp(i pi sigma^y / 4) = (I + i sigma^y) / sqrt(2)
            return {{r, r, -r, r}};
        case Axis::Y:  // exp(-i pi sigma^x / 4) = (I - i sigma^x) / sqrt(2)
            return {{r, Complex(0, -r), Complex(0, -r), r}};
        case Axis::Z: break;
    }
    return Mat2::identity();
}

double axis_p0(const StateVector& s, std::size_t q, Axis axis) {
    if (axis == Axis::Z) return s.marginal_p0(q);
    StateVector rotated = s;
    rotated.apply_single_qubit(q, pre_rotation(axis));
    return rotated.marginal_p0(q);
}

ShotCounts sample_bernoulli(double p0, std::size_t shots, std::uint64_t seed, double readout_flip) {
    if (shots == 0) throw ValidationError("shots must be positive");
    check_probability(readout_flip);
    p0 = std::clamp(p0, 0.0, 1.0);
    Rng rng(seed);
    ShotCounts c{shots, 0, 0};
    for (std::size_t k = 0; k < shots; ++k) {
        bool one = uniform01(rng) >= p0;
        if (readout_flip > 0.0 && uniform01(rng) < readout_flip) one = !one;
        one ? ++c.n1 : ++c.n0;
    }
    return c;
}

ShotCounts sample_counts(const StateVector& s, std::size_t q, Axis axis, std::size_t shots,
                         std::uint64_t seed, const NoiseModel* noise) {
    if (shots == 0) throw ValidationError("shots must be positive");
    return sample_bernoulli(axis_p0(s, q, axis), shots, seed, noise ? noise->readout_flip(q) : 0.0);
}

SampledEstimate estimate_pauli(const ShotCounts& c) {
    if (c.shots == 0 || c.n0 + c.n1 != c.shots) throw ValidationError("inconsistent shot counts");
    const double n = static_cast<double>(c.shots);
    const double value = (static_cast<double>(c.n0) - static_cast<double>(c.n1)) / n;
    return {value, std::sqrt(std::max(0.0, 1.0 - value * value) / n), c.shots};
}

EntanglementEstimate combine_axis_estimates(const std::array<SampledEstimate, 3>& axes) {
    double norm2 = 0.0, grad2 = 0.0, max_err = 0.0;
    for (const auto& a : axes) {
        norm2 += a.value * a.value;
        grad2 += (a.value * a.std_error) * (a.value * a.std_error);
        max_err = std::max(max_err, a.std_error);
    }
    const double norm = std::sqrt(norm2);
    EntanglementEstimate e;
    e.axes = axes;
    e.value = 0.5 * (1.0 - norm);
    e.error = norm < max_err ? 0.5 * max_err : 0.5 * std::sqrt(grad2) / norm;
    return e;
}

EntanglementEstimate estimate_entanglement(const StateVector& s, std::size_t q,
                                           std::size_t shots_per_axis, std::uint64_t seed,
                                           const NoiseModel* noise) {
    std::array<SampledEstimate, 3> axes;
    for (int a = 0; a < 3; ++a) {
        axes[a] = estimate_pauli(sample_counts(s, q, static_cast<Axis>(a), shots_per_axis, seed + a, noise));
    }
    return combine_axis_estimates(axes);
}

Circuit gate_noise_channel(const Circuit& c, const NoiseModel& noise, std::uint64_t seed) {
    Rng rng(seed);
    Circuit out(c.n_qubits());
    auto pauli_on = [&out](std::size_t index, std::size_t q) {
        if (index != 0) out.append({kPauliKinds[index], {}, {q}});
    };
    for (const auto& op : c.ops()) {
        out.append(op);
        switch (op.kind) {
            case GateKind::RY:
            case GateKind::RZ:
            case GateKind::H: {
                const std::size_t q = op.targets[0];
                const double p = noise.single_gate_error(q);
                if (p > 0.0 && uniform01(rng) < p) pauli_on(1 + uniform_index(rng, 3), q);
                break;
            }
            case GateKind::CP: {
                const std::size_t a = op.targets[0], b = op.targets[1];
                const double p = noise.two_qubit_gate_error(a, b);
                if (p > 0.0 && uniform01(rng) < p) {
                    const std::size_t k = 1 + uniform_index(rng, 15);  // skips I (x) I
                    pauli_on(k % 4, a);
                    pauli_on(k / 4, b);
                }
                break;
            }
            default: break;
        }
    }
    return out;
}

EntanglementEstimate estimate_entanglement_noisy(const Graph& g, const PrepParams& p,
                                                 std::size_t q, std::size_t shots_per_axis,
                                                 std::uint64_t seed, const NoiseModel& noise,
                                                 std::size_t trajectories, std::size_t max_qubits) {
    if (trajectories == 0) throw ValidationError("trajectories must be positive");
    if (shots_per_axis == 0) throw ValidationError("shots must be positive");
    if (q >= g.n_vertices()) throw ValidationError("qubit " + std::to_string(q) + " out of range");
    const Circuit prep = build_preparation_circuit(g, p);
    std::array<double, 3> p0{};
    for (std::size_t t = 0; t < trajectories; ++t) {
        const Circuit noisy = gate_noise_channel(prep, noise, splitmix64(seed ^ splitmix64(t)));
        const StateVector s = simulate(noisy, max_qubits);
        for (int a = 0; a < 3; ++a) p0[a] += axis_p0(s, q, static_cast<Axis>(a));
    }
    std::array<SampledEstimate, 3> axes;
    for (int a = 0; a < 3; ++a) {
        axes[a] = estimate_pauli(sample_bernoulli(p0[a] / static_cast<double>(trajectories),
                                                  shots_per_axis, seed + a, noise.readout_flip(q)));
    }
    return combine_axis_estimates(axes);
}

}  // namespace graphent
