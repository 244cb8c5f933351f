// Copyright 2026 The tmc Authors
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

#ifndef _TMC_CIRCUIT_H
#define _TMC_CIRCUIT_H

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tmc/gates.h"
#include "tmc/tableau.h"

namespace tmc {

/// A gate applied to specific qubits. Target order carries the roles of
/// asymmetric gates (control first for CX and ECR).
struct Instruction {
    const GateDef *gate = nullptr;
    std::vector<size_t> targets;

    bool operator==(const Instruction &other) const;
};

using Layer = std::vector<Instruction>;

/// A layered circuit. Layers are never empty and never touch a qubit twice.
struct Circuit {
    size_t num_qubits = 0;
    std::vector<Layer> layers;

    Circuit() = default;
    explicit Circuit(size_t n) : num_qubits(n) {}

    /// Validates and appends a layer, growing num_qubits if needed. Empty
    /// layers are dropped.
    void append_layer(Layer layer);
    size_t depth() const { return layers.size(); }
    size_t instruction_count() const;

    /// Same circuit with every layer sorted by gate name, then first target.
    Circuit normalized() const;
    bool operator==(const Circuit &other) const;
};

/// Throws std::invalid_argument if the instruction is malformed or the layer
/// reuses a qubit.
void validate_layer(const Layer &layer, size_t num_qubits);

class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &message);
    size_t line() const { return line_; }

   private:
    size_t line_;
};

/// Parses the text dialect. See README.md for the grammar.
Circuit parse_circuit(std::string_view text);

struct EmitOptions {
    /// Replace each ECR layer by S/SQRT_X, CX, X layers.
    bool expand_ecr = false;
};

std::string emit_circuit(const Circuit &c, const EmitOptions &options = {});

/// Left-to-right fold of every instruction onto the identity tableau.
Tableau circuit_tableau(const Circuit &c);
/// Same, but on at least `num_qubits` qubits.
Tableau circuit_tableau(const Circuit &c, size_t num_qubits);

std::map<std::string, size_t> gate_counts(const Circuit &c);
size_t two_qubit_count(const Circuit &c);

/// Moves every instruction into the earliest layer after the last layer
/// touching one of its qubits. Does not change the tableau.
Circuit compact(const Circuit &c);

/// Concatenation of two circuits (layers of a followed by layers of b).
Circuit concat(const Circuit &a, const Circuit &b);

/// Replaces every ECR layer by its three-layer S/SQRT_X, CX, X expansion.
Circuit expand_ecr(const Circuit &c);

/// Inserts a single-qubit gate on `qubit` at layer boundary `boundary`
/// (0 = before the first layer, depth() = after the last), working modulo
/// Paulis. If the neighbouring layer just before (else just after) the
/// boundary already holds a single-qubit gate on that wire, the two are fused
/// into one class gate, and removed if the class is I. Otherwise the gate
/// joins an adjacent all-single-qubit layer, or a new layer is created.
/// Only the class of `g` is kept. Throws std::invalid_argument for an
/// invalid position or a two-qubit gate.
Circuit insert_single_qubit(const Circuit &c, size_t boundary, size_t qubit, const GateDef &g);
/// In-place form of insert_single_qubit. Returns the change in layer count
/// (-1, 0 or +1); the change always happens at or before `boundary`.
int insert_single_qubit_in_place(Circuit &c, size_t boundary, size_t qubit, const GateDef &g);

}  // namespace tmc

#endif
