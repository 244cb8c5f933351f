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

#ifndef _TMC_GATES_H
#define _TMC_GATES_H

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmc/pauli.h"
#include "tmc/tableau.h"

namespace tmc {

/// Local-equivalence class of a two-qubit Clifford. CX-like gates keep one
/// Pauli on each wire from spreading; iSWAP-like gates keep none.
enum class EntanglerClass {
    none,
    cx_like,
    iswap_like,
    swap_like,
};

std::string_view entangler_class_name(EntanglerClass c);

struct GateDef {
    std::string name;
    size_t arity = 0;
    Tableau semantics;
    LocalAction action;
    /// Invariant under exchanging its two targets. Always true for arity 1.
    bool symmetric = true;
    EntanglerClass entangler_class = EntanglerClass::none;

    bool is_pauli() const;
};

/// Builds a gate from its tableau, deriving arity, symmetry and class.
GateDef make_gate(std::string name, Tableau semantics);

/// Registry lookup by canonical name or alias (CNOT). Throws
/// std::invalid_argument for unknown names.
const GateDef &builtin(std::string_view name);
/// Registry lookup that returns nullptr for unknown names.
const GateDef *find_builtin(std::string_view name);
/// Every registered gate, in a fixed order.
std::span<const GateDef *const> all_builtins();

EntanglerClass classify_entangler(const Tableau &semantics);

/// The non-identity Pauli that, placed on `wire` alone, is conjugated onto
/// that wire alone. Exists for CX-like gates (one per wire); nullopt otherwise.
std::optional<Pauli> commuting_local_pauli(const Tableau &semantics, size_t wire);
std::optional<Pauli> commuting_local_pauli(const GateDef &g, size_t wire);

// Single-qubit Cliffords modulo Paulis.
//
// Each class is fixed by the letters it sends X and Z to. The six named
// representatives are I, H, H_XY, H_YZ, C_XYZ and C_ZYX.

/// The named class gate sending X to `x_image` and Z to `z_image` up to sign.
/// Throws std::invalid_argument unless the two letters anticommute.
const GateDef &class_gate(Pauli x_image, Pauli z_image);
/// Class representative of an arbitrary single-qubit gate.
const GateDef &class_of(const Tableau &single_qubit);
/// Class of `first` followed by `second`.
const GateDef &fuse_classes(const GateDef &first, const GateDef &second);
/// The six class gates, I first.
std::span<const GateDef *const> class_gates();
/// Image letter of p under a class gate (sign dropped).
Pauli class_image(const GateDef &g, Pauli p);

struct GateSet {
    std::string name;
    const GateDef *entangler = nullptr;
    std::vector<const GateDef *> natives;
    /// Keeps a runtime-built entangler alive (see make_gate).
    std::shared_ptr<const GateDef> owned_entangler;
};

/// Throws std::invalid_argument if the entangler is not two-qubit entangling
/// or the natives do not generate all 24 single-qubit Cliffords.
GateSet make_gateset(std::string name, const GateDef &entangler, std::vector<const GateDef *> natives);
GateSet make_gateset(std::string name, std::shared_ptr<const GateDef> entangler, std::vector<const GateDef *> natives);

/// Named target gatesets: cx, cz, sqrt_xx, ecr, iswap. Native sets: s_sx
/// ({S, SQRT_X}) and class6 (H, H_XY, H_YZ, C_XYZ, C_ZYX left unexpanded).
GateSet gateset_by_name(std::string_view entangler, std::string_view natives = "s_sx");
const GateDef &entangler_by_target_name(std::string_view target);

struct SingleQubitDecomposition {
    std::vector<const GateDef *> gates;
    /// Pauli to run after `gates` for exact equality with the decomposed gate.
    Pauli residual = Pauli::I;
};

/// Shortest word over `natives` equal to g up to a Pauli. Among words of the
/// same length the lexicographically first (in natives order) wins.
SingleQubitDecomposition decompose_single_qubit(const GateDef &g, std::span<const GateDef *const> natives);
SingleQubitDecomposition decompose_single_qubit(const GateDef &g, const GateSet &gs);

/// The 24 single-qubit Cliffords (closure of S and SQRT_X), each named after a
/// registry gate when one matches exactly, else "<class>*<Pauli>".
std::vector<GateDef> all_single_qubit_cliffords();

}  // namespace tmc

#endif
