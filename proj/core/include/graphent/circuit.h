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
#include <string>
#include <vector>

#include "graphent/graph.h"
#include "graphent/linalg.h"
#include "graphent/statevector.h"

namespace graphent {

/// X, Y and Z are noise Paulis inserted by trajectory sampling; they are never
/// emitted by circuit builders and cannot be exported.
enum class GateKind { RY, RZ, H, CP, X, Y, Z, Measure };

struct GateOp {
    GateKind kind;
    std::vector<double> params;
    std::vector<std::size_t> targets;

    bool operator==(const GateOp&) const = default;
};

class Circuit {
   public:
    explicit Circuit(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<GateOp>& ops() const { return ops_; }

    /// Validates arity, parameter count and target range. Rejects any op on
    /// a qubit that has already been measured.
    Circuit& append(GateOp op);

    Circuit& ry(std::size_t q, double angle) { return append({GateKind::RY, {angle}, {q}}); }
    Circuit& rz(std::size_t q, double angle) { return append({GateKind::RZ, {angle}, {q}}); }
    Circuit& h(std::size_t q) { return append({GateKind::H, {}, {q}}); }
    Circuit& cp(std::size_t a, std::size_t b, double phi) {
        return append({GateKind::CP, {phi}, {a, b}});
    }
    Circuit& measure(std::size_t q) { return append({GateKind::Measure, {}, {q}}); }

    std::size_t count(GateKind kind) const;
    bool is_measured(std::size_t q) const;

    bool operator==(const Circuit&) const = default;

   private:
    std::size_t n_qubits_;
    std::vector<GateOp> ops_;
};

/// Single-qubit layer then one CP(phi) per edge in sorted edge order.
///
/// Each qubit gets RY(theta) followed by RZ(alpha) when alpha != 0. At
/// theta = pi/2, alpha = 0 the layer is a plain H. The prepared state equals
/// prepare_graph_state(g, p) up to a global phase.
Circuit build_preparation_circuit(const Graph& g, const PrepParams& p);

/// Appends the basis change for the axis (as RY/RZ ops) and a measurement of q.
/// x: RY(-pi/2) = exp(i pi sigma^y / 4). y: RZ(pi/2) RY(pi/2) RZ(-pi/2) =
/// exp(-i pi sigma^x / 4). z: nothing. Throws ValidationError if q is
/// already measured.
void append_measurement(Circuit& c, std::size_t q, Axis axis);

/// Runs every unitary op on |0...0>, skipping measurements.
StateVector simulate(const Circuit& c, std::size_t max_qubits = kDefaultMaxQubits);

/// The 2x2 matrix of a single-qubit op.
Mat2 gate_matrix(const GateOp& op);

struct QasmOptions {
    /// Spell the controlled phase "cp" instead of the qelib1 "cu1".
    bool use_cp = false;
};

/// OpenQASM 2.0 text. Angles use 17 significant digits. Throws ExportError if
/// the circuit carries noise Paulis.
std::string export_openqasm(const Circuit& c, const QasmOptions& options = {});

}  // namespace graphent
