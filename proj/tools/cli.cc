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
#include "cli.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "graphent/analytic.h"
#include "graphent/angle.h"
#include "graphent/circuit.h"
#include "graphent/error.h"

namespace graphent::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string shortest(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

template <typename T>
std::string optional_field(const std::optional<T>& v) {
    if (!v) return {};
    if constexpr (std::is_floating_point_v<T>) {
        return shortest(*v);
    } else {
        return std::to_string(*v);
    }
}

/// Writes to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << text)) throw ParseError("cannot write '" + out_path + "'");
}

std::vector<std::size_t> resolve_qubits(const Graph& g, const std::string& spec) {
    std::vector<std::size_t> qubits;
    if (spec == "all") {
        for (std::size_t q = 0; q < g.n_vertices(); ++q) qubits.push_back(q);
        return qubits;
    }
    std::size_t q = 0;
    auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), q);
    if (spec.empty() || ec != std::errc() || ptr != spec.data() + spec.size()) {
        throw ValidationError("--qubit expects an index or 'all', got '" + spec + "'");
    }
    if (q >= g.n_vertices()) {
        throw ValidationError("qubit " + spec + " out of range for " + std::to_string(g.n_vertices()) +
                              " vertices");
    }
    return {q};
}

std::string render_csv(const std::vector<ResultRow>& rows) {
    std::string text(kCsvHeader);
    text += '\n';
    for (const auto& r : rows) text += format_csv_row(r) + '\n';
    return text;
}

/// Options shared by entangle and sweep.
struct CommonArgs {
    std::string graph;
    std::string qubit = "all";
    std::string phi = "pi";
    std::string alpha = "0";
    std::string theta = "pi/2";
    std::string modes = "analytic,exact";
    std::size_t shots = kDefaultShots;
    std::uint64_t seed = 1;
    std::string calib;
    bool gate_noise = false;
    std::size_t trajectories = kDefaultTrajectories;
    std::string out;

    void attach(CLI::App* app) {
        app->add_option("--graph", graph, "kind[:n] (chain, claw, complete, cycle, star) or file:<path>")
            ->required();
        app->add_option("--qubit", qubit, "Vertex index or 'all'")->capture_default_str();
        app->add_option("--phi", phi, "Controlled-phase angle")->capture_default_str();
        app->add_option("--alpha", alpha, "Relative phase of the one-qubit state")->capture_default_str();
        app->add_option("--theta", theta, "Polar angle of the one-qubit state")->capture_default_str();
        app->add_option("--modes", modes, "Comma list of analytic, exact, sampled")->capture_default_str();
        app->add_option("--shots", shots, "Shots per measurement axis")->capture_default_str();
        app->add_option("--seed", seed, "Master seed for sampling")->capture_default_str();
        app->add_option("--calib", calib, "Calibration file enabling readout noise");
        app->add_flag("--gate-noise", gate_noise, "Add stochastic Pauli gate noise from --calib");
        app->add_option("--trajectories", trajectories, "Gate-noise trajectories")->capture_default_str();
        app->add_option("--out", out, "Write CSV here instead of stdout");
    }

    EvalOptions eval_options() const {
        EvalOptions o;
        o.modes = parse_modes(modes);
        o.shots = shots;
        o.seed = seed;
        o.max_qubits = max_qubits_from_env();
        if (o.modes.sampled && shots == 0) throw ValidationError("--shots must be positive");
        if (!calib.empty()) o.noise.calibration = load_calibration(calib);
        if (gate_noise && !o.noise.calibration) throw ValidationError("--gate-noise needs --calib");
        if (trajectories == 0) throw ValidationError("--trajectories must be positive");
        o.noise.gate_noise = gate_noise;
        o.noise.trajectories = trajectories;
        return o;
    }
};

}  // namespace

Graph resolve_graph(std::string_view source) {
    if (source.starts_with("file:")) return parse_edge_list(read_file(std::string(source.substr(5))));
    const auto colon = source.find(':');
    const GraphKind kind = parse_graph_kind(source.substr(0, colon));
    if (colon == std::string_view::npos) {
        if (kind == GraphKind::Claw) return generate_named(kind, 4);
        throw ValidationError("graph '" + std::string(source) + "' needs a size, e.g. chain:5");
    }
    const std::string_view size = source.substr(colon + 1);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(size.data(), size.data() + size.size(), n);
    if (size.empty() || ec != std::errc() || ptr != size.data() + size.size()) {
        throw ValidationError("invalid graph size in '" + std::string(source) + "'");
    }
    return generate_named(kind, n);
}

Modes parse_modes(std::string_view list) {
    Modes m;
    while (!list.empty()) {
        const auto comma = list.find(',');
        const std::string_view item = list.substr(0, comma);
        list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
        if (item == "analytic") {
            m.analytic = true;
        } else if (item == "exact") {
            m.exact = true;
        } else if (item == "sampled") {
            m.sampled = true;
        } else {
            throw ValidationError("unknown mode '" + std::string(item) + "'");
        }
    }
    if (!m.analytic && !m.exact && !m.sampled) throw ValidationError("no modes selected");
    return m;
}

std::string format_csv_row(const ResultRow& r) {
    std::string line = csv_field(r.graph_name);
    for (const std::string& f :
         {std::to_string(r.qubit), std::to_string(r.degree), shortest(r.theta), shortest(r.phi),
          shortest(r.alpha), optional_field(r.e_analytic), optional_field(r.e_exact),
          optional_field(r.e_sampled), optional_field(r.e_sampled_err), optional_field(r.shots),
          optional_field(r.seed)}) {
        line += ',';
        line += f;
    }
    return line;
}

std::vector<ResultRow> evaluate_point(const Graph& g, std::string_view graph_name,
                                      const std::vector<std::size_t>& qubits, const PrepParams& p,
                                      const EvalOptions& options, std::uint64_t first_seed) {
    const bool noisy_prep = options.modes.sampled && options.noise.gate_noise;
    const bool need_state = options.modes.exact || (options.modes.sampled && !noisy_prep);
    std::optional<StateVector> state;
    if (need_state) state = prepare_graph_state(g, p, options.max_qubits);
    const NoiseModel* readout = options.noise.calibration ? &*options.noise.calibration : nullptr;

    std::vector<ResultRow> rows;
    rows.reserve(qubits.size());
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        const std::size_t q = qubits[k];
        ResultRow row;
        row.graph_name = graph_name;
        row.qubit = q;
        row.degree = g.degree(static_cast<Vertex>(q));
        row.theta = p.theta();
        row.phi = p.phi();
        row.alpha = p.alpha();
        if (options.modes.analytic) row.e_analytic = analytic_entanglement(row.degree, p.phi(), p.theta());
        if (options.modes.exact) row.e_exact = state->exact_entanglement(q);
        if (options.modes.sampled) {
            const std::uint64_t seed = first_seed + 3 * k;
            const EntanglementEstimate e =
                noisy_prep ? estimate_entanglement_noisy(g, p, q, options.shots, seed,
                                                         *options.noise.calibration,
                                                         options.noise.trajectories, options.max_qubits)
                           : estimate_entanglement(*state, q, options.shots, seed, readout);
            row.e_sampled = e.value;
            row.e_sampled_err = e.error;
            row.shots = options.shots;
            row.seed = seed;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    if (spec.steps < 2) throw ValidationError("sweep needs at least 2 steps");
    if (!(spec.start < spec.stop)) throw ValidationError("sweep start must be below stop");
    std::vector<double> grid(spec.steps);
    const double span = spec.stop - spec.start;
    const double last = static_cast<double>(spec.steps - 1);
    for (std::size_t k = 0; k < spec.steps; ++k) {
        grid[k] = spec.start + span * (static_cast<double>(k) / last);
    }
    grid.back() = spec.stop;
    return grid;
}

std::vector<ResultRow> run_sweep(const Graph& g, std::string_view graph_name,
                                 const std::vector<std::size_t>& qubits, const SweepSpec& spec,
                                 const EvalOptions& options) {
    const std::vector<double> grid = sweep_grid(spec);
    std::vector<std::vector<ResultRow>> per_point(grid.size());
    std::vector<std::exception_ptr> failures(grid.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t k = next++; k < grid.size(); k = next++) {
            try {
                const double v = grid[k];
                const PrepParams p = spec.parameter == SweepParameter::Theta
                                         ? PrepParams(spec.phi, spec.alpha, v)
                                         : PrepParams(v, spec.alpha, spec.theta);
                per_point[k] = evaluate_point(g, graph_name, qubits, p, options,
                                              options.seed + 3 * k * qubits.size());
            } catch (...) {
                failures[k] = std::current_exception();
            }
        }
    };
    const std::size_t n_threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, grid.size());
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::vector<ResultRow> rows;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (failures[k]) std::rethrow_exception(failures[k]);
        std::move(per_point[k].begin(), per_point[k].end(), std::back_inserter(rows));
    }
    return rows;
}

std::size_t max_qubits_from_env() {
    const char* env = std::getenv("GRAPHENT_MAX_QUBITS");
    if (env == nullptr || *env == '\0') return kDefaultMaxQubits;
    const std::string_view text(env);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ValidationError("GRAPHENT_MAX_QUBITS must be a nonnegative integer");
    }
    return n;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph-state entanglement: closed form, exact simulation and sampled measurement"};
    app.require_subcommand(1);

    CommonArgs entangle_args;
    CLI::App* entangle = app.add_subcommand("entangle", "Entanglement of graph-state qubits at one point");
    entangle_args.attach(entangle);

    CommonArgs sweep_args;
    std::string sweep_param = "theta";
    std::string sweep_start, sweep_stop;
    std::size_t sweep_steps = 25;
    CLI::App* sweep = app.add_subcommand("sweep", "Entanglement along a theta or phi sweep");
    sweep_args.attach(sweep);
    sweep->add_option("--param", sweep_param, "Swept parameter: theta or phi")
        ->check(CLI::IsMember({"theta", "phi"}))
        ->capture_default_str();
    sweep->add_option("--start", sweep_start, "First value (default 0)");
    sweep->add_option("--stop", sweep_stop, "Last value (default pi for theta, 2pi for phi)");
    sweep->add_option("--steps", sweep_steps, "Grid points, endpoints included")->capture_default_str();

    std::string qasm_graph, qasm_phi = "pi", qasm_alpha = "0", qasm_theta = "pi/2", qasm_axis = "z", qasm_out;
    std::optional<std::size_t> qasm_measure;
    bool qasm_cp = false;
    CLI::App* qasm = app.add_subcommand("export-qasm", "Write the preparation circuit as OpenQASM 2.0");
    qasm->add_option("--graph", qasm_graph, "kind[:n] or file:<path>")->required();
    qasm->add_option("--phi", qasm_phi)->capture_default_str();
    qasm->add_option("--alpha", qasm_alpha)->capture_default_str();
    qasm->add_option("--theta", qasm_theta)->capture_default_str();
    qasm->add_option("--measure", qasm_measure, "Append a measurement of this qubit");
    qasm->add_option("--axis", qasm_axis, "Measurement axis: x, y or z")
        ->check(CLI::IsMember({"x", "y", "z"}))
        ->capture_default_str();
    qasm->add_flag("--cp", qasm_cp, "Spell the controlled phase 'cp' instead of 'cu1'");
    qasm->add_option("--out", qasm_out, "Output path (stdout if omitted)");

    std::string gen_kind, gen_out;
    std::optional<std::size_t> gen_n;
    CLI::App* gen = app.add_subcommand("gen-graph", "Write a named graph as an edge list");
    gen->add_option("kind", gen_kind, "chain, claw, complete, cycle or star")->required();
    gen->add_option("n", gen_n, "Vertex count (claw: 4)");
    gen->add_option("--out", gen_out, "Output path (stdout if omitted)");

    std::string dump_graph, dump_phi = "pi", dump_alpha = "0", dump_theta = "pi/2", dump_out;
    CLI::App* dump = app.add_subcommand("dump-state", "Write the graph state as a binary amplitude dump");
    dump->add_option("--graph", dump_graph, "kind[:n] or file:<path>")->required();
    dump->add_option("--phi", dump_phi)->capture_default_str();
    dump->add_option("--alpha", dump_alpha)->capture_default_str();
    dump->add_option("--theta", dump_theta)->capture_default_str();
    dump->add_option("--out", dump_out, "Output path")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (entangle->parsed()) {
            const auto& a = entangle_args;
            const Graph g = resolve_graph(a.graph);
            const EvalOptions options = a.eval_options();
            const PrepParams p(parse_angle(a.phi), parse_angle(a.alpha), parse_angle(a.theta));
            const auto rows = evaluate_point(g, a.graph, resolve_qubits(g, a.qubit), p, options, options.seed);
            emit(render_csv(rows), a.out, out);
        } else if (sweep->parsed()) {
            const auto& a = sweep_args;
            const Graph g = resolve_graph(a.graph);
            const EvalOptions options = a.eval_options();
            SweepSpec spec;
            spec.parameter = sweep_param == "phi" ? SweepParameter::Phi : SweepParameter::Theta;
            spec.start = sweep_start.empty() ? 0.0 : parse_angle(sweep_start);
            spec.stop = !sweep_stop.empty() ? parse_angle(sweep_stop)
                                            : parse_angle(spec.parameter == SweepParameter::Phi ? "2pi" : "pi");
            spec.steps = sweep_steps;
            spec.phi = parse_angle(a.phi);
            spec.alpha = parse_angle(a.alpha);
            spec.theta = parse_angle(a.theta);
            const auto rows = run_sweep(g, a.graph, resolve_qubits(g, a.qubit), spec, options);
            emit(render_csv(rows), a.out, out);
        } else if (qasm->parsed()) {
            const Graph g = resolve_graph(qasm_graph);
            const PrepParams p(parse_angle(qasm_phi), parse_angle(qasm_alpha), parse_angle(qasm_theta));
            Circuit c = build_preparation_circuit(g, p);
            if (qasm_measure) append_measurement(c, *qasm_measure, parse_axis(qasm_axis.front()));
            emit(export_openqasm(c, {.use_cp = qasm_cp}), qasm_out, out);
        } else if (gen->parsed()) {
            const GraphKind kind = parse_graph_kind(gen_kind);
            if (!gen_n && kind != GraphKind::Claw) throw ValidationError("gen-graph " + gen_kind + " needs n");
            emit(to_edge_list(generate_named(kind, gen_n.value_or(4))), gen_out, out);
        } else if (dump->parsed()) {
            const Graph g = resolve_graph(dump_graph);
            const PrepParams p(parse_angle(dump_phi), parse_angle(dump_alpha), parse_angle(dump_theta));
            std::ostringstream buf;
            write_binary(prepare_graph_state(g, p, max_qubits_from_env()), buf);
            emit(buf.str(), dump_out, out);
        }
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kResource;
    }
    return kOk;
}

}  // namespace graphent::cli
