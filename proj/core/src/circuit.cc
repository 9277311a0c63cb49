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
#include "graphent/circuit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "graphent/error.h"

namespace graphent {

namespace {

std::size_t arity(GateKind kind) { return kind == GateKind::CP ? 2 : 1; }

std::size_t param_count(GateKind kind) {
    switch (kind) {
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::CP: return 1;
        default: return 0;
    }
}

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

}  // namespace

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) throw ValidationError("circuit needs at least one qubit");
}

Circuit& Circuit::append(GateOp op) {
    if (op.targets.size() != arity(op.kind)) throw ValidationError("wrong number of gate targets");
    if (op.params.size() != param_count(op.kind)) throw ValidationError("wrong number of gate parameters");
    for (std::size_t q : op.targets) {
        if (q >= n_qubits_) {
            throw ValidationError("gate target " + std::to_string(q) + " out of range for " +
                                  std::to_string(n_qubits_) + " qubits");
        }
        if (is_measured(q)) {
            throw ValidationError("qubit " + std::to_string(q) + " has already been measured");
        }
    }
    if (op.targets.size() == 2 && op.targets[0] == op.targets[1]) {
        throw ValidationError("two-qubit gate targets must be distinct");
    }
    ops_.push_back(std::move(op));
    return *this;
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [kind](const GateOp& op) { return op.kind == kind; }));
}

bool Circuit::is_measured(std::size_t q) const {
    return std::any_of(ops_.begin(), ops_.end(), [q](const GateOp& op) {
        return op.kind == GateKind::Measure && op.targets[0] == q;
    });
}

Circuit build_preparation_circuit(const Graph& g, const PrepParams& p) {
    Circuit c(g.n_vertices());
    const bool plus_state = p.alpha() == 0.0 && std::abs(p.theta() - std::numbers::pi / 2) <= 1e-12;
    for (std::size_t q = 0; q < g.n_vertices(); ++q) {
        if (plus_state) {
            c.h(q);
            continue;
        }
        c.ry(q, p.theta());
        if (p.alpha() != 0.0) c.rz(q, p.alpha());
    }
    for (const auto& [a, b] : g.edges()) c.cp(a, b, p.phi());
    return c;
}

void append_measurement(Circuit& c, std::size_t q, Axis axis) {
    if (q < c.n_qubits() && c.is_measured(q)) {
        throw ValidationError("qubit " + std::to_string(q) + " is already measured");
    }
    constexpr double kQuarter = std::numbers::pi / 2;
    switch (axis) {
        case Axis::X:
            c.ry(q, -kQuarter);
            break;
        case Axis::Y:
            c.rz(q, kQuarter).ry(q, kQuarter).rz(q, -kQuarter);
            break;
        case Axis::Z:
            break;
    }
    c.measure(q);
}

Mat2 gate_matrix(const GateOp& op) {
    switch (op.kind) {
        case GateKind::RY: return ry(op.params[0]);
        case GateKind::RZ: return rz(op.params[0]);
        case GateKind::H: return hadamard();
        case GateKind::X: return pauli(Axis::X);
        case GateKind::Y: return pauli(Axis::Y);
        case GateKind::Z: return pauli(Axis::Z);
        case GateKind::CP:
        case GateKind::Measure: break;
    }
    throw ValidationError("gate has no single-qubit matrix");
}

StateVector simulate(const Circuit& c, std::size_t max_qubits) {
    StateVector s(c.n_qubits(), max_qubits);
    for (const auto& op : c.ops()) {
        switch (op.kind) {
            case GateKind::Measure: break;
            case GateKind::CP: s.apply_controlled_phase(op.targets[0], op.targets[1], op.params[0]); break;
            default: s.apply_single_qubit(op.targets[0], gate_matrix(op)); break;
        }
    }
    return s;
}

std::string export_openqasm(const Circuit& c, const QasmOptions& options) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.n_qubits() << "];\n";
    const std::size_t n_measure = c.count(GateKind::Measure);
    if (n_measure > 0) out << "creg c[" << n_measure << "];\n";

    std::size_t bit = 0;
    for (const auto& op : c.ops()) {
        const auto q0 = op.targets[0];
        switch (op.kind) {
            case GateKind::H: out << "h q[" << q0 << "];\n"; break;
            case GateKind::RY: out << "ry(" << format_angle(op.params[0]) << ") q[" << q0 << "];\n"; break;
            case GateKind::RZ: out << "rz(" << format_angle(op.params[0]) << ") q[" << q0 << "];\n"; break;
            case GateKind::CP:
                out << (options.use_cp ? "cp(" : "cu1(") << format_angle(op.params[0]) << ") q[" << q0
                    << "],q[" << op.targets[1] << "];\n";
                break;
            case GateKind::Measure: out << "measure q[" << q0 << "] -> c[" << bit++ << "];\n"; break;
            case GateKind::X:
            case GateKind::Y:
            case GateKind::Z: throw ExportError("noise Paulis are simulation-only and cannot be exported");
        }
    }
    return out.str();
}

}  // namespace graphent
