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

#ifndef _TMC_GENERATORS_H
#define _TMC_GENERATORS_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tmc/circuit.h"

namespace tmc {

/// Qubit placement of a distance-d rotated surface code patch.
///
/// Data qubits sit at odd coordinates (2i+1, 2j+1), 0 <= i, j < d, and come
/// first in row-major order (y outer). Ancillas sit at even coordinates
/// (2i, 2j); the one at (2i, 2j) measures X if i + j is odd and Z otherwise.
/// Every interior site is used; the top and bottom edges keep only X
/// ancillas and the left and right edges only Z ancillas, corners excluded.
/// Ancillas follow the data qubits in row-major order.
struct SurfaceCodeLayout {
    size_t distance = 0;
    std::vector<std::pair<int, int>> coords;
    std::vector<size_t> data;
    std::vector<size_t> x_ancillas;
    std::vector<size_t> z_ancillas;

    size_t num_qubits() const { return coords.size(); }
    /// Data qubits touched by ancilla `a` in CX layers 0..3 (SIZE_MAX where the
    /// neighbour is off the patch).
    std::vector<size_t> schedule(size_t a) const;
};

/// Throws std::invalid_argument unless d is odd and at least 3.
SurfaceCodeLayout surface_code_layout(size_t distance);

/// One round of syndrome extraction without measurement: H on the X
/// ancillas, four CX layers, H on the X ancillas. X ancillas control their
/// data neighbours with coordinate offsets (+1,+1), (+1,-1),
/// (-1,+1), (-1,-1); Z ancillas are targeted by theirs in the order (+1,+1),
/// (-1,+1), (+1,-1), (-1,-1). This interleaving keeps every layer disjoint
/// and the X and Z checks commuting.
Circuit surface_code_syndrome_extraction(size_t distance);

/// The same circuit as text, preceded by QUBIT_COORDS annotations.
std::string surface_code_text(size_t distance);

struct RandomCircuitSpec {
    size_t num_qubits = 2;
    size_t entangler_layers = 1;
    uint64_t seed = 0;
    const GateDef *entangler = nullptr;
};

/// Uniformly random single-qubit Cliffords (a class layer then a Pauli layer)
/// around each of `entangler_layers` layers, where each entangler layer joins
/// between 1 and n/2 random disjoint pairs in random orientation. Identity
/// gates are omitted. Deterministic for given parameters on every platform.
/// Throws std::invalid_argument if n < 2 or the entangler is not two-qubit.
Circuit random_clifford_circuit(const RandomCircuitSpec &spec);

}  // namespace tmc

#endif
