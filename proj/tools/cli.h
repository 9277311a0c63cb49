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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/graph.h"
#include "graphent/measurement.h"
#include "graphent/statevector.h"

namespace graphent::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2, kResource = 3 };

/// "<kind>[:n]" for a named family (claw defaults to n = 4) or "file:<path>".
Graph resolve_graph(std::string_view source);

/// Comma list drawn from analytic, exact, sampled.
struct Modes {
    bool analytic = false;
    bool exact = false;
    bool sampled = false;
};
Modes parse_modes(std::string_view list);

struct NoiseOptions {
    std::optional<NoiseModel> calibration;
    bool gate_noise = false;
    std::size_t trajectories = kDefaultTrajectories;
};

struct EvalOptions {
    Modes modes;
    std::size_t shots = kDefaultShots;
    std::uint64_t seed = 1;
    NoiseOptions noise;
    std::size_t max_qubits = kDefaultMaxQubits;
};

struct ResultRow {
    std::string graph_name;
    std::size_t qubit = 0;
    std::size_t degree = 0;
    double theta = 0.0;
    double phi = 0.0;
    double alpha = 0.0;
    std::optional<double> e_analytic;
    std::optional<double> e_exact;
    std::optional<double> e_sampled;
    std::optional<double> e_sampled_err;
    std::optional<std::size_t> shots;
    std::optional<std::uint64_t> seed;
};

inline constexpr std::string_view kCsvHeader =
    "graph,qubit,degree,theta,phi,alpha,e_analytic,e_exact,e_sampled,e_sampled_err,shots,seed";

std::string format_csv_row(const ResultRow& row);

/// Rows for the given qubits at one parameter point. Row k samples with seed
/// first_seed + 3 k (its three axes use that seed and the next two).
std::vector<ResultRow> evaluate_point(const Graph& g, std::string_view graph_name,
                                      const std::vector<std::size_t>& qubits, const PrepParams& p,
                                      const EvalOptions& options, std::uint64_t first_seed);

enum class SweepParameter { Theta, Phi };

struct SweepSpec {
    SweepParameter parameter = SweepParameter::Theta;
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 25;
    /// phi/alpha/theta held fixed; the swept one is overwritten per point.
    double phi = 0.0;
    double alpha = 0.0;
    double theta = 0.0;
};

/// Grid values, inclusive of both endpoints. Throws ValidationError unless
/// steps >= 2 and start < stop.
std::vector<double> sweep_grid(const SweepSpec& spec);

/// Evaluates every grid point (concurrently) and returns rows in grid order,
/// qubits ascending within a point.
std::vector<ResultRow> run_sweep(const Graph& g, std::string_view graph_name,
                                 const std::vector<std::size_t>& qubits, const SweepSpec& spec,
                                 const EvalOptions& options);

/// Reads GRAPHENT_MAX_QUBITS; falls back to the default cap when unset.
std::size_t max_qubits_from_env();

/// Entry point shared by the executable and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphent::cli
