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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "graphent/analytic.h"
#include "graphent/error.h"
#include "test_util.h"

#ifndef GRAPHENT_DATA_DIR
#error "GRAPHENT_DATA_DIR must point at core/data"
#endif

using namespace graphent;
using graphent::testing::random_state;
using std::numbers::pi;

namespace {

const std::string kAthens = std::string(GRAPHENT_DATA_DIR) + "/ibmq_athens_2021-06-09.calib";

StateVector one_qubit(Complex a0, Complex a1) { return StateVector::from_amplitudes({a0, a1}); }

}  // namespace

TEST(pre_rotation, examples) {
    EXPECT_EQ(pre_rotation(Axis::Z), Mat2::identity());

    StateVector plus = init_product_state(1, {0.0, 0.0, pi / 2});
    plus.apply_single_qubit(0, pre_rotation(Axis::X));
    EXPECT_NEAR(plus.pauli_expectation(0, Axis::Z), 1.0, 1e-15);

    const double r = std::numbers::sqrt2 / 2;
    StateVector y_plus = one_qubit(r, Complex(0, r));
    y_plus.apply_single_qubit(0, pre_rotation(Axis::Y));
    EXPECT_NEAR(y_plus.pauli_expectation(0, Axis::Z), 1.0, 1e-15);
}

TEST(pre_rotation, matches_operator_exponentials) {
    // exp(i pi sigma^y / 4) = RY(-pi/2); exp(-i pi sigma^x / 4) = RX(pi/2).
    EXPECT_LT(max_abs_diff(pre_rotation(Axis::X), ry(-pi / 2)), 1e-15);
    EXPECT_LT(max_abs_diff(pre_rotation(Axis::Y), rx(pi / 2)), 1e-15);
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) EXPECT_LT(unitarity_defect(pre_rotation(a)), 1e-15);
}

TEST(pre_rotation, maps_axis_expectation_onto_z) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector s = random_state(rng, 1);
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
            StateVector rotated = s;
            rotated.apply_single_qubit(0, pre_rotation(a));
            EXPECT_NEAR(rotated.pauli_expectation(0, Axis::Z), s.pauli_expectation(0, a), 1e-12);
        }
    }
}

TEST(sample_counts, deterministic_outcomes) {
    EXPECT_EQ(sample_counts(StateVector(1), 0, Axis::Z, 1000, 5), (ShotCounts{1000, 1000, 0}));
    StateVector plus = init_product_state(2, {0.0, 0.0, pi / 2});
    EXPECT_EQ(sample_counts(plus, 1, Axis::X, 777, 9), (ShotCounts{777, 777, 0}));
    EXPECT_THROW(sample_counts(plus, 0, Axis::Z, 0, 1), ValidationError);
    EXPECT_THROW(sample_counts(plus, 2, Axis::Z, 10, 1), ValidationError);
}

TEST(sample_counts, readout_flip_rate_matches_calibration) {
    NoiseModel noise;
    noise.set_readout_flip(0, 0.0107);
    const std::size_t shots = 1'000'000;
    const ShotCounts c = sample_counts(StateVector(1), 0, Axis::Z, shots, 2021, &noise);
    const double rate = static_cast<double>(c.n1) / shots;
    EXPECT_NEAR(rate, 0.0107, 5 * std::sqrt(0.0107 * 0.9893 / shots));
}

TEST(sample_counts, is_deterministic_in_seed) {
    std::mt19937_64 rng(43);
    NoiseModel noise;
    noise.set_readout_flip(1, 0.05);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector s = random_state(rng, 3);
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
            EXPECT_EQ(sample_counts(s, 1, a, 4096, 1234, &noise), sample_counts(s, 1, a, 4096, 1234, &noise));
        }
    }
    const StateVector s = random_state(rng, 3);
    EXPECT_NE(sample_counts(s, 0, Axis::X, 4096, 1), sample_counts(s, 0, Axis::X, 4096, 2));
}

TEST(estimate_pauli, examples) {
    SampledEstimate all_zero = estimate_pauli({100, 100, 0});
    EXPECT_EQ(all_zero.value, 1.0);
    EXPECT_EQ(all_zero.std_error, 0.0);

    SampledEstimate balanced = estimate_pauli({100, 50, 50});
    EXPECT_EQ(balanced.value, 0.0);
    EXPECT_NEAR(balanced.std_error, 0.1, 1e-15);

    SampledEstimate e = estimate_pauli({8192, 6000, 2192});
    EXPECT_NEAR(e.value, 0.46484375, 1e-15);
    EXPECT_NEAR(e.std_error, 0.009782300063979862, 1e-12);
    EXPECT_NEAR(e.std_error, std::sqrt((1 - e.value * e.value) / 8192), 1e-12);

    EXPECT_THROW(estimate_pauli({10, 3, 3}), ValidationError);
    EXPECT_THROW(estimate_pauli({0, 0, 0}), ValidationError);
}

TEST(estimate_pauli, unbiased_over_seeds) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        const StateVector s = random_state(rng, 3);
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
            double mean = 0.0, stderr_sum = 0.0;
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                const SampledEstimate e = estimate_pauli(sample_counts(s, 2, a, 2000, 1000 * trial + seed));
                mean += e.value / 100;
                stderr_sum += e.std_error / 100;
            }
            EXPECT_NEAR(mean, s.pauli_expectation(2, a), 5 * stderr_sum / std::sqrt(100.0));
        }
    }
}

TEST(estimate_pauli, standard_error_scales_as_inverse_sqrt_shots) {
    // Exact proportions: the ratio is 1/2 exactly.
    const SampledEstimate small = estimate_pauli({4000, 3000, 1000});
    const SampledEstimate large = estimate_pauli({16000, 12000, 4000});
    EXPECT_NEAR(large.std_error / small.std_error, 0.5, 1e-12);

    // Sampled: within 1%.
    const StateVector s = init_product_state(1, {0.0, 0.4, 1.2});
    const SampledEstimate a = estimate_pauli(sample_counts(s, 0, Axis::X, 100'000, 3));
    const SampledEstimate b = estimate_pauli(sample_counts(s, 0, Axis::X, 400'000, 4));
    EXPECT_NEAR(b.std_error / a.std_error, 0.5, 0.005);
}

TEST(estimate_pauli, readout_flip_scales_value) {
    NoiseModel noise;
    noise.set_readout_flip(0, 0.2);
    const std::size_t shots = 1'000'000;
    const StateVector zero(1);
    const StateVector one = StateVector::from_amplitudes({0.0, 1.0});
    const SampledEstimate e0 = estimate_pauli(sample_counts(zero, 0, Axis::Z, shots, 8, &noise));
    const SampledEstimate e1 = estimate_pauli(sample_counts(one, 0, Axis::Z, shots, 9, &noise));
    EXPECT_NEAR(e0.value, (1 - 2 * 0.2) * 1.0, 5 * e0.std_error);
    EXPECT_NEAR(e1.value, (1 - 2 * 0.2) * -1.0, 5 * e1.std_error);
}

TEST(estimate_entanglement, separable_product_state) {
    const StateVector s = init_product_state(3, {0.0, 0.0, pi / 2});
    const EntanglementEstimate e = estimate_entanglement(s, 1, 100'000, 77);
    EXPECT_NEAR(e.value, 0.0, 5 * e.error);
}

TEST(estimate_entanglement, chain_points) {
    const Graph chain = generate_named(GraphKind::Chain, 5);
    const EntanglementEstimate cluster =
        estimate_entanglement(prepare_graph_state(chain, {pi, 0.0, pi / 2}), 0, kDefaultShots, 5);
    EXPECT_NEAR(cluster.value, 0.5, 5 * cluster.error);

    const EntanglementEstimate quarter =
        estimate_entanglement(prepare_graph_state(chain, {pi / 2, 0.0, pi / 2}), 1, 8192, 6);
    EXPECT_NEAR(quarter.value, 0.25, 5 * quarter.error);
}

TEST(estimate_entanglement, uses_consecutive_axis_seeds) {
    const StateVector s = prepare_graph_state(generate_named(GraphKind::Claw, 4), {1.0, 0.5, 1.0});
    const EntanglementEstimate e = estimate_entanglement(s, 1, 1000, 40);
    for (int a = 0; a < 3; ++a) {
        const SampledEstimate direct = estimate_pauli(sample_counts(s, 1, static_cast<Axis>(a), 1000, 40 + a));
        EXPECT_EQ(e.axes[a].value, direct.value);
    }
}

TEST(estimate_entanglement, error_propagation) {
    const std::array<SampledEstimate, 3> axes = {
        SampledEstimate{0.6, 0.01, 100}, SampledEstimate{0.0, 0.02, 100}, SampledEstimate{0.8, 0.006, 100}};
    const EntanglementEstimate e = combine_axis_estimates(axes);
    EXPECT_NEAR(e.value, 0.0, 1e-15);
    EXPECT_NEAR(e.error, 0.5 * std::hypot(0.6 * 0.01, 0.8 * 0.006), 1e-15);

    // Degenerate gradient: norm below the largest standard error.
    const EntanglementEstimate flat = combine_axis_estimates(
        {SampledEstimate{0.001, 0.011, 8192}, SampledEstimate{-0.002, 0.011, 8192},
         SampledEstimate{0.0, 0.012, 8192}});
    EXPECT_NEAR(flat.error, 0.5 * 0.012, 1e-15);
}

TEST(noise_model, setters_and_defaults) {
    NoiseModel m;
    EXPECT_TRUE(m.empty());
    EXPECT_EQ(m.readout_flip(3), 0.0);
    m.set_two_qubit_gate_error(2, 1, 0.25);
    EXPECT_EQ(m.two_qubit_gate_error(1, 2), 0.25);
    EXPECT_FALSE(m.empty());
    EXPECT_THROW(m.set_readout_flip(0, 1.5), ValidationError);
    EXPECT_THROW(m.set_single_gate_error(0, -0.1), ValidationError);
    EXPECT_THROW(m.set_two_qubit_gate_error(1, 1, 0.1), ValidationError);
}

TEST(noise_model, bundled_calibration_file) {
    const NoiseModel m = load_calibration(kAthens);
    const double readout[] = {1.07e-2, 1.30e-2, 1.70e-2, 1.31e-2, 2.00e-2};
    const double gate[] = {2.98e-4, 3.16e-4, 5.26e-4, 2.54e-4, 2.89e-4};
    for (std::size_t q = 0; q < 5; ++q) {
        EXPECT_EQ(m.readout_flip(q), readout[q]);
        EXPECT_EQ(m.single_gate_error(q), gate[q]);
    }
    EXPECT_EQ(m.two_qubit_gate_error(0, 1), 12.04e-3);
    EXPECT_EQ(m.two_qubit_gate_error(2, 1), 11.13e-3);
    EXPECT_EQ(m.two_qubit_gate_error(2, 3), 18.50e-3);
    EXPECT_EQ(m.two_qubit_gate_error(4, 3), 6.80e-3);
    EXPECT_EQ(m.two_qubit_gate_error(0, 4), 0.0);
}

TEST(noise_model, calibration_parse_errors) {
    EXPECT_THROW(parse_calibration("readout.0 0.1\n"), ParseError);
    EXPECT_THROW(parse_calibration("readout.x=0.1\n"), ParseError);
    EXPECT_THROW(parse_calibration("t1.0=30\n"), ParseError);
    EXPECT_THROW(parse_calibration("gate2.01=0.1\n"), ParseError);
    EXPECT_THROW(parse_calibration("readout.0=abc\n"), ParseError);
    EXPECT_THROW(parse_calibration("readout.0=1.5\n"), ValidationError);
    EXPECT_THROW(parse_calibration("gate2.0_1=0.1\ngate2.1_0=0.2\n"), ValidationError);
    EXPECT_THROW(parse_calibration("gate2.2_2=0.1\n"), ValidationError);
    EXPECT_THROW(load_calibration("/nonexistent/file.calib"), ParseError);
    const NoiseModel ok = parse_calibration("# c\n\n  readout.3 = 0.25  \ngate2.1_0=0.1\ngate2.0_1=0.1\n");
    EXPECT_EQ(ok.readout_flip(3), 0.25);
    EXPECT_EQ(ok.two_qubit_gate_error(0, 1), 0.1);
}

TEST(gate_noise_channel, zero_noise_leaves_circuit_unchanged) {
    const Circuit c = build_preparation_circuit(generate_named(GraphKind::Complete, 4), {1.0, 0.3, 0.8});
    EXPECT_EQ(gate_noise_channel(c, NoiseModel{}, 99), c);
}

TEST(gate_noise_channel, forced_single_qubit_error) {
    Circuit c(2);
    c.h(0);
    NoiseModel noise;
    noise.set_single_gate_error(0, 1.0);
    std::map<GateKind, int> seen;
    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        const Circuit noisy = gate_noise_channel(c, noise, seed);
        ASSERT_EQ(noisy.ops().size(), 2u);
        EXPECT_EQ(noisy.ops()[0], c.ops()[0]);
        EXPECT_EQ(noisy.ops()[1].targets, std::vector<std::size_t>{0});
        ++seen[noisy.ops()[1].kind];
    }
    ASSERT_EQ(seen.size(), 3u);
    for (GateKind k : {GateKind::X, GateKind::Y, GateKind::Z}) EXPECT_NEAR(seen[k], 1000, 5 * 26);
}

TEST(gate_noise_channel, forced_two_qubit_error_covers_fifteen_paulis) {
    Circuit c(3);
    c.cp(0, 2, 0.5);
    NoiseModel noise;
    noise.set_two_qubit_gate_error(0, 2, 1.0);
    std::map<std::pair<int, int>, int> seen;
    auto code = [](const Circuit& n, std::size_t q) {
        for (std::size_t i = 1; i < n.ops().size(); ++i)
            if (n.ops()[i].targets[0] == q) return static_cast<int>(n.ops()[i].kind) - static_cast<int>(GateKind::X) + 1;
        return 0;
    };
    for (std::uint64_t seed = 0; seed < 15000; ++seed) {
        const Circuit noisy = gate_noise_channel(c, noise, seed);
        ASSERT_GE(noisy.ops().size(), 2u);
        ASSERT_LE(noisy.ops().size(), 3u);
        ++seen[{code(noisy, 0), code(noisy, 2)}];
    }
    EXPECT_EQ(seen.size(), 15u);
    EXPECT_EQ(seen.count({0, 0}), 0u);
    for (const auto& [pair, count] : seen) EXPECT_NEAR(count, 1000, 5 * 31);
}

TEST(gate_noise_channel, deterministic_in_seed) {
    const Circuit c = build_preparation_circuit(generate_named(GraphKind::Chain, 5), {pi, 0.0, pi / 2});
    NoiseModel noise;
    noise.set_single_gate_error(2, 0.5);
    noise.set_two_qubit_gate_error(1, 2, 0.5);
    EXPECT_EQ(gate_noise_channel(c, noise, 17), gate_noise_channel(c, noise, 17));
}

TEST(gate_noise_channel, measurement_is_left_alone) {
    Circuit c(1);
    c.h(0);
    append_measurement(c, 0, Axis::Z);
    NoiseModel noise;
    noise.set_single_gate_error(0, 1.0);
    const Circuit noisy = gate_noise_channel(c, noise, 3);
    EXPECT_EQ(noisy.ops().back().kind, GateKind::Measure);
    EXPECT_EQ(noisy.count(GateKind::Measure), 1u);
}

TEST(noisy_estimate, depolarized_plus_state) {
    // H followed by a certain random Pauli: <x> averages to (1 - 1 - 1)/3.
    NoiseModel noise;
    noise.set_single_gate_error(0, 1.0);
    const EntanglementEstimate e =
        estimate_entanglement_noisy(Graph(1, {}), {0.0, 0.0, pi / 2}, 0, 1'000'000, 5, noise, 3000);
    EXPECT_NEAR(e.axes[0].value, -1.0 / 3, 0.05);
    EXPECT_NEAR(e.axes[1].value, 0.0, 0.01);
    EXPECT_NEAR(e.axes[2].value, 0.0, 0.01);
}

TEST(noisy_estimate, without_gate_errors_matches_noiseless_sampling) {
    const Graph g = generate_named(GraphKind::Claw, 4);
    const PrepParams p(2.0, 0.4, 1.1);
    NoiseModel readout_only;
    readout_only.set_readout_flip(1, 0.013);
    const EntanglementEstimate noisy = estimate_entanglement_noisy(g, p, 1, 8192, 12, readout_only, 3);
    const EntanglementEstimate plain = estimate_entanglement(prepare_graph_state(g, p), 1, 8192, 12, &readout_only);
    EXPECT_NEAR(noisy.value, plain.value, 1e-3);
}

TEST(noisy_estimate, chain5_under_athens_rates) {
    // At phi = pi, theta = pi/2 every Pauli trajectory is again a stabilizer
    // state whose qubit 0 has zero mean spin, so gate and readout noise leave
    // the averaged probabilities at 1/2. The estimate is still biased below
    // 0.5: the sampled norm is sigma * chi_3 with sigma = 1/sqrt(8192), so
    // E[E_est] = 0.5 - 0.5 sigma E[chi_3] = 0.5 - 0.5 sigma 2 sqrt(2/pi).
    const NoiseModel athens = load_calibration(kAthens);
    const Graph chain = generate_named(GraphKind::Chain, 5);
    const double sigma = 1.0 / std::sqrt(8192.0);
    const double expected = 0.5 - sigma * std::sqrt(2.0 / pi);  // 0.491185
    const double chi3_sd = std::sqrt(3.0 - 8.0 / pi);
    const int runs = 20;
    double mean = 0.0;
    for (int k = 0; k < runs; ++k) {
        mean += estimate_entanglement_noisy(chain, {pi, 0.0, pi / 2}, 0, 8192, 1000 + 3 * k, athens, 200).value / runs;
    }
    EXPECT_LT(mean, 0.5);
    EXPECT_NEAR(mean, expected, 5 * 0.5 * sigma * chi3_sd / std::sqrt(double(runs)));
}

TEST(noisy_estimate, gate_noise_raises_entanglement_off_the_stabilizer_point) {
    // phi = pi/2: Pauli errors shrink the averaged mean spin of qubit 1, so the
    // trajectory-averaged estimate exceeds the noiseless value 0.25.
    NoiseModel heavy;
    for (std::size_t q = 0; q < 5; ++q) heavy.set_single_gate_error(q, 0.2);
    for (std::size_t q = 0; q + 1 < 5; ++q) heavy.set_two_qubit_gate_error(q, q + 1, 0.2);
    const EntanglementEstimate e = estimate_entanglement_noisy(generate_named(GraphKind::Chain, 5),
                                                               {pi / 2, 0.0, pi / 2}, 1, 100'000, 3, heavy, 400);
    EXPECT_GT(e.value, 0.25 + 5 * e.error);
}

TEST(noisy_estimate, validation) {
    const Graph g = generate_named(GraphKind::Chain, 2);
    EXPECT_THROW(estimate_entanglement_noisy(g, {}, 0, 100, 1, NoiseModel{}, 0), ValidationError);
    EXPECT_THROW(estimate_entanglement_noisy(g, {}, 0, 0, 1, NoiseModel{}, 1), ValidationError);
    EXPECT_THROW(estimate_entanglement_noisy(g, {}, 2, 10, 1, NoiseModel{}, 1), ValidationError);
}
