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

#ifndef _TMC_COMPILER_H
#define _TMC_COMPILER_H

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tmc/circuit.h"
#include "tmc/gates.h"
#include "tmc/report.h"
#include "tmc/tableau.h"

namespace tmc {

/// Basis-change lookup: the class gate g with g(X') = X and g(Z') = Z up to
/// sign, for a current local pair (X', Z') and a wanted pair (X, Z). Defined
/// on the 6 x 6 ordered anticommuting pairs.
struct ConjugationLookup {
    /// Throws std::invalid_argument unless both pairs anticommute.
    static const GateDef &lookup(Pauli current_x, Pauli current_z, Pauli target_x, Pauli target_z);
    /// The six valid pairs in table order: (X,Y) (X,Z) (Y,X) (Y,Z) (Z,X) (Z,Y).
    static const std::array<std::pair<Pauli, Pauli>, 6> &pairs();
};

enum class FrameMode {
    /// Frame reported in metadata only.
    report,
    /// Frame appended as a final Pauli layer.
    fold,
    /// Compilation fails unless the frame is the identity.
    none,
};

enum class Strategy {
    /// Greedy propagation fix, falling back to discrepancy tracking.
    automatic,
    /// Greedy only; fails if the greedy pass cannot reach the target.
    greedy,
    /// Discrepancy tracking only.
    tracked,
};

struct CompileOptions {
    FrameMode frame = FrameMode::report;
    Strategy strategy = Strategy::automatic;
    /// iSWAP heuristic only: interactions available on the device, unordered.
    /// Empty means unrestricted.
    std::vector<std::pair<size_t, size_t>> allowed_pairs;
};

struct CompilationResult {
    /// Gateset gates only, plus a Pauli layer in fold mode.
    Circuit circuit;
    /// Same circuit before single-qubit classes were expanded into natives.
    Circuit class_circuit;
    /// Pauli to apply after `circuit` (on its output wires) for exact equality.
    PauliProduct frame;
    Report stats;
    /// Depth once the frame is folded in as Pauli gates and rescheduled.
    size_t depth_with_frame = 0;
    bool verified = false;
    /// Output wire of each logical qubit. Identity except for the iSWAP heuristic.
    std::vector<size_t> permutation;
    /// "greedy" or "tracked".
    std::string strategy_used;
    /// Native interactions not in CompileOptions::allowed_pairs.
    std::vector<std::pair<size_t, size_t>> flagged_pairs;
};

class CompileError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class VerificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// One native entangler per source entangler, on the same ordered pair and in
/// the same entangler layers; all single-qubit gates dropped. Throws
/// CompileError if a source entangler is of a different class than the
/// gateset's.
Circuit initial_condition(const Circuit &source, const GateSet &gs);

/// Greedy pass over qubits in ascending order. Before each entangler on a
/// qubit, inserts the class gate that makes the images of its X and Z spread
/// (or not) onto the partner exactly as in the target. Throws CompileError
/// when a constraint cannot be met (e.g. both images must stay local).
Circuit fix_propagation(const Circuit &working, const Tableau &target, const GateSet &gs);

/// Appends, per qubit, the lookup gate that maps its current diagonal local
/// pair onto the target's. Throws CompileError on a degenerate local pair.
Circuit fix_conjugation(const Circuit &working, const Tableau &target);

/// Exact alternative to the greedy pass: walks the source while keeping the
/// per-wire single-qubit discrepancy between source prefix and compiled
/// prefix, and absorbs it before each native entangler. Always succeeds when
/// the source entanglers are locally equivalent to the native one. Output
/// uses class gates and is equal to the source up to a Pauli frame.
Circuit tracked_compile(const Circuit &source, const GateSet &gs);

/// Replaces each class gate by its native decomposition (residual Paulis
/// dropped); a layer expands into as many layers as its longest word.
Circuit expand_to_natives(const Circuit &class_circuit, const GateSet &gs);

/// Pauli F such that appending F to `compiled` reproduces `target` exactly.
/// Throws CompileError if the tableaux differ by more than signs.
PauliProduct extract_frame(const Circuit &compiled, const Tableau &target);

/// Full pipeline. The output is ASAP-scheduled. Throws CompileError for unsupported input and
/// VerificationError if the final exact check fails.
CompilationResult compile(const Circuit &source, const GateSet &gs, const CompileOptions &options = {});

/// Cross-class compilation (CX-like into iSWAP-like or back). Each native
/// entangler is paired with a virtual SWAP so the pair matches the source
/// class, the normal pipeline runs, and the SWAPs are then removed by
/// relabelling later gates. The result is equal to the source after
/// routing output wire permutation[q] back to q, up to its frame.
CompilationResult compile_iswap_heuristic(const Circuit &source, const GateSet &gs,
                                          const CompileOptions &options = {});

}  // namespace tmc

#endif
