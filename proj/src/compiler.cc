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

#include "tmc/compiler.h"

#include <algorithm>
#include <map>
#include <mutex>

namespace tmc {

namespace {

// Basis-change table. Rows: current pair (X', Z'); columns: wanted pair
// (X, Z); both in the order of ConjugationLookup::pairs().
constexpr const char *kLookupTable[6][6] = {
    {"I", "H_YZ", "H_XY", "C_XYZ", "C_ZYX", "H"},
    {"H_YZ", "I", "C_XYZ", "H_XY", "H", "C_ZYX"},
    {"H_XY", "C_ZYX", "I", "H", "H_YZ", "C_XYZ"},
    {"C_ZYX", "H_XY", "H", "I", "C_XYZ", "H_YZ"},
    {"C_XYZ", "H", "H_YZ", "C_ZYX", "I", "H_XY"},
    {"H", "C_XYZ", "C_ZYX", "H_YZ", "H_XY", "I"},
};

// Tie-break order when several class gates satisfy a constraint.
constexpr const char *kPrecedence[6] = {"I", "H_XY", "H_YZ", "H", "C_XYZ", "C_ZYX"};

size_t precedence_rank(const GateDef &g) {
    for (size_t k = 0; k < 6; k++) {
        if (g.name == kPrecedence[k]) {
            return k;
        }
    }
    return 6;
}

size_t pair_index(Pauli x, Pauli z) {
    const auto &pairs = ConjugationLookup::pairs();
    for (size_t k = 0; k < pairs.size(); k++) {
        if (pairs[k].first == x && pairs[k].second == z) {
            return k;
        }
    }
    throw std::invalid_argument(std::string("not an anticommuting pair: ") + pauli_char(x) + "," + pauli_char(z));
}

/// Preferred class gate sending letter `from` to letter `to`.
const GateDef &class_mapping(Pauli from, Pauli to) {
    for (const char *name : kPrecedence) {
        const GateDef &g = builtin(name);
        if (class_image(g, from) == to) {
            return g;
        }
    }
    throw std::logic_error("no class gate maps the given letters");
}

bool is_local_product(const Tableau &t) {
    for (size_t q = 0; q < t.num_qubits(); q++) {
        for (const PauliProduct *img : {&t.x_image(q), &t.z_image(q)}) {
            auto s = support(*img);
            if (s.size() != 1 || s[0] != q) {
                return false;
            }
        }
    }
    return true;
}

const GateDef &wire_class(const Tableau &local, size_t wire) {
    return class_gate(local.x_image(wire).get(wire), local.z_image(wire).get(wire));
}

Tableau class_pair_tableau(const GateDef &a, const GateDef &b) {
    Tableau t(2);
    t.append(a.action, std::array<size_t, 1>{0});
    t.append(b.action, std::array<size_t, 1>{1});
    return t;
}

const GateDef &inverse_class(const GateDef &g) { return class_of(g.semantics.inverse()); }

// Source entangler == (pre0 (x) pre1) then native then (post0 (x) post1), up to Paulis.
struct LocalEquivalence {
    const GateDef *pre[2];
    const GateDef *post[2];
};

// Local m = (m0 (x) m1) with native^-1 m native local; `conj` holds that product.
struct Normalizer {
    const GateDef *m_inv[2];
    const GateDef *conj[2];
};

std::mutex cache_mutex;

LocalEquivalence local_equivalence(const GateDef &src, const GateDef &native) {
    static std::map<std::string, LocalEquivalence> cache;
    std::string key = src.semantics.str() + "|" + native.semantics.str();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    Tableau native_inv = native.semantics.inverse();
    for (const GateDef *p0 : class_gates()) {
        for (const GateDef *p1 : class_gates()) {
            Tableau pre_inv = class_pair_tableau(*p0, *p1).inverse();
            Tableau post = native_inv.then(pre_inv).then(src.semantics);
            if (is_local_product(post)) {
                LocalEquivalence e{{p0, p1}, {&wire_class(post, 0), &wire_class(post, 1)}};
                std::lock_guard<std::mutex> lock(cache_mutex);
                cache.emplace(key, e);
                return e;
            }
        }
    }
    throw CompileError(src.name + " is not locally equivalent to " + native.name);
}

std::vector<Normalizer> normalizers(const GateDef &native) {
    static std::map<std::string, std::vector<Normalizer>> cache;
    std::string key = native.semantics.str();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    std::vector<Normalizer> result;
    Tableau native_inv = native.semantics.inverse();
    for (const GateDef *m0 : class_gates()) {
        for (const GateDef *m1 : class_gates()) {
            Tableau conj = native_inv.then(class_pair_tableau(*m0, *m1)).then(native.semantics);
            if (is_local_product(conj)) {
                result.push_back({{&inverse_class(*m0), &inverse_class(*m1)}, {&wire_class(conj, 0), &wire_class(conj, 1)}});
            }
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, result);
    return result;
}

void require_same_class(const GateDef &src, const GateSet &gs) {
    if (src.entangler_class != gs.entangler->entangler_class) {
        throw CompileError("source entangler " + src.name + " is " +
                           std::string(entangler_class_name(src.entangler_class)) + " but " + gs.entangler->name +
                           " is " + std::string(entangler_class_name(gs.entangler->entangler_class)) +
                           "; cross-class compilation needs the iSWAP heuristic");
    }
}

size_t width(const Circuit &c, const Tableau &target) { return std::max(c.num_qubits, target.num_qubits()); }

std::vector<size_t> identity_permutation(size_t n) {
    std::vector<size_t> perm(n);
    for (size_t q = 0; q < n; q++) {
        perm[q] = q;
    }
    return perm;
}

// Runs the configured strategy and returns a class-level circuit equal to
// the source up to signs.
Circuit class_compile(const Circuit &source, const Tableau &target, const GateSet &gs, Strategy strategy,
                      std::string &used) {
    Circuit skeleton = initial_condition(source, gs);
    if (strategy != Strategy::tracked) {
        try {
            Circuit w = fix_conjugation(fix_propagation(skeleton, target, gs), target);
            if (equal_up_to_sign(circuit_tableau(w, target.num_qubits()), target).equal) {
                used = "greedy";
                return w;
            }
            if (strategy == Strategy::greedy) {
                throw CompileError("greedy pass did not reach the target tableau");
            }
        } catch (const CompileError &) {
            if (strategy == Strategy::greedy) {
                throw;
            }
        }
    }
    used = "tracked";
    return tracked_compile(source, gs);
}

// Expands to natives, solves and checks the frame, and fills the result.
// `perm[q]` is the output wire holding logical qubit q.
CompilationResult finish(const Circuit &class_circuit, const Tableau &target, const GateSet &gs,
                         const CompileOptions &options, std::vector<size_t> perm, size_t source_two_qubit) {
    size_t n = target.num_qubits();
    CompilationResult result;
    result.class_circuit = class_circuit;
    result.class_circuit.num_qubits = n;
    Circuit native = expand_to_natives(result.class_circuit, gs);
    native.num_qubits = n;

    if (two_qubit_count(native) != source_two_qubit) {
        throw VerificationError("two-qubit gate count changed during compilation");
    }
    std::vector<size_t> inv(n);
    for (size_t q = 0; q < n; q++) {
        inv[perm[q]] = q;
    }
    Tableau physical = circuit_tableau(native, n);
    Tableau logical = physical.relabel_outputs(inv);
    SignComparison cmp = equal_up_to_sign(logical, target);
    if (!cmp.equal) {
        throw VerificationError("compiled tableau differs from the target beyond signs");
    }
    std::vector<PauliProduct> images = logical.generator_images();
    PauliProduct logical_frame = solve_frame(images, cmp.flips);
    PauliProduct frame(n);
    for (size_t q = 0; q < n; q++) {
        frame.set(perm[q], logical_frame.get(q));
    }
    Tableau folded = physical;
    folded.append_pauli(frame);
    if (!(folded.relabel_outputs(inv) == target)) {
        throw VerificationError("frame does not restore exact equality");
    }
    if (options.frame == FrameMode::none && !frame.is_identity()) {
        throw CompileError("compilation needs frame " + frame.letters() + " but frame mode is none");
    }
    // ASAP scheduling: same per-wire gate order, fewer layers.
    native = compact(native);
    Circuit folded_circuit = native;
    if (!frame.is_identity()) {
        Layer paulis;
        for (size_t q = 0; q < n; q++) {
            Pauli p = frame.get(q);
            if (p != Pauli::I) {
                paulis.push_back({&builtin(std::string(1, pauli_char(p))), {q}});
            }
        }
        folded_circuit.append_layer(std::move(paulis));
        folded_circuit = compact(folded_circuit);
        folded_circuit.num_qubits = n;
    }
    result.depth_with_frame = folded_circuit.depth();
    result.circuit = options.frame == FrameMode::fold ? std::move(folded_circuit) : std::move(native);
    result.frame = frame;
    result.stats = make_report(result.circuit);
    result.verified = true;
    result.permutation = std::move(perm);
    return result;
}

}  // namespace

const std::array<std::pair<Pauli, Pauli>, 6> &ConjugationLookup::pairs() {
    static const std::array<std::pair<Pauli, Pauli>, 6> p{{{Pauli::X, Pauli::Y},
                                                            {Pauli::X, Pauli::Z},
                                                            {Pauli::Y, Pauli::X},
                                                            {Pauli::Y, Pauli::Z},
                                                            {Pauli::Z, Pauli::X},
                                                            {Pauli::Z, Pauli::Y}}};
    return p;
}

const GateDef &ConjugationLookup::lookup(Pauli current_x, Pauli current_z, Pauli target_x, Pauli target_z) {
    return builtin(kLookupTable[pair_index(current_x, current_z)][pair_index(target_x, target_z)]);
}

Circuit initial_condition(const Circuit &source, const GateSet &gs) {
    Circuit out(source.num_qubits);
    for (const auto &layer : source.layers) {
        Layer entanglers;
        for (const auto &inst : layer) {
            if (inst.gate->arity != 2) {
                continue;
            }
            require_same_class(*inst.gate, gs);
            entanglers.push_back({gs.entangler, inst.targets});
        }
        out.append_layer(std::move(entanglers));
    }
    return out;
}

Circuit fix_propagation(const Circuit &working, const Tableau &target, const GateSet &gs) {
    (void)gs;
    Circuit c = working;
    size_t n = width(working, target);
    c.num_qubits = n;
    for (size_t j = 0; j < n; j++) {
        PauliProduct img_x = PauliProduct::single(n, j, Pauli::X);
        PauliProduct img_z = PauliProduct::single(n, j, Pauli::Z);
        std::vector<bool> spread_x(n, false), spread_z(n, false);
        for (size_t q : support(target.x_image(j))) {
            spread_x[q] = true;
        }
        for (size_t q : support(target.z_image(j))) {
            spread_z[q] = true;
        }
        std::array<size_t, 1> wire{j};
        for (size_t l = 0; l < c.layers.size(); l++) {
            for (const auto &inst : c.layers[l]) {
                if (inst.gate->arity != 2 || (inst.targets[0] != j && inst.targets[1] != j)) {
                    continue;
                }
                size_t w = inst.targets[0] == j ? 0 : 1;
                size_t k = inst.targets[1 - w];
                std::optional<Pauli> fixed = commuting_local_pauli(*inst.gate, w);
                if (!fixed.has_value()) {
                    throw CompileError("greedy pass needs a CX-like entangler, got " + inst.gate->name);
                }
                Pauli px = img_x.get(j), pz = img_z.get(j);
                if (!anticommute(px, pz)) {
                    throw CompileError("qubit " + std::to_string(j) + " lost its local pair before layer " +
                                       std::to_string(l));
                }
                bool x_stays = !spread_x[k], z_stays = !spread_z[k];
                if (x_stays && z_stays) {
                    throw CompileError("target unreachable under same-structure initial condition: X" +
                                       std::to_string(j) + " and Z" + std::to_string(j) + " must both avoid qubit " +
                                       std::to_string(k));
                }
                // The letter that has to become the commuting Pauli.
                Pauli needed = x_stays ? px : z_stays ? pz : pauli_xor(px, pz);
                if (needed != *fixed) {
                    const GateDef &g = class_mapping(needed, *fixed);
                    l += insert_single_qubit_in_place(c, l, j, g);
                    g.action.apply(img_x, wire);
                    g.action.apply(img_z, wire);
                }
                break;
            }
            for (const auto &inst : c.layers[l]) {
                inst.gate->action.apply(img_x, inst.targets);
                inst.gate->action.apply(img_z, inst.targets);
            }
        }
    }
    return c;
}

Circuit fix_conjugation(const Circuit &working, const Tableau &target) {
    size_t n = width(working, target);
    Tableau current = circuit_tableau(working, n);
    Circuit c = working;
    c.num_qubits = n;
    for (size_t j = 0; j < n; j++) {
        Pauli cx = current.x_image(j).get(j), cz = current.z_image(j).get(j);
        Pauli tx = target.x_image(j).get(j), tz = target.z_image(j).get(j);
        if (!anticommute(cx, cz) || !anticommute(tx, tz)) {
            throw CompileError("degenerate diagonal local pair on qubit " + std::to_string(j));
        }
        insert_single_qubit_in_place(c, c.layers.size(), j, ConjugationLookup::lookup(cx, cz, tx, tz));
    }
    return c;
}

Circuit tracked_compile(const Circuit &source, const GateSet &gs) {
    size_t n = source.num_qubits;
    const GateDef &identity = builtin("I");
    std::vector<const GateDef *> discrepancy(n, &identity);
    std::vector<Normalizer> norm = normalizers(*gs.entangler);
    Circuit out(n);
    for (const auto &layer : source.layers) {
        Layer pre, entanglers;
        for (const auto &inst : layer) {
            if (inst.gate->arity == 1) {
                size_t q = inst.targets[0];
                discrepancy[q] = &fuse_classes(*discrepancy[q], class_of(inst.gate->semantics));
                continue;
            }
            require_same_class(*inst.gate, gs);
            LocalEquivalence eq = local_equivalence(*inst.gate, *gs.entangler);
            size_t a = inst.targets[0], b = inst.targets[1];
            const GateDef &g0 = fuse_classes(*discrepancy[a], *eq.pre[0]);
            const GateDef &g1 = fuse_classes(*discrepancy[b], *eq.pre[1]);
            const Normalizer *best = nullptr;
            const GateDef *best_k[2] = {nullptr, nullptr};
            std::pair<size_t, size_t> best_cost{99, 99};
            for (const auto &m : norm) {
                const GateDef &k0 = fuse_classes(g0, *m.m_inv[0]);
                const GateDef &k1 = fuse_classes(g1, *m.m_inv[1]);
                std::pair<size_t, size_t> cost{size_t(&k0 != &identity) + size_t(&k1 != &identity),
                                               precedence_rank(k0) + precedence_rank(k1)};
                if (cost < best_cost) {
                    best_cost = cost;
                    best = &m;
                    best_k[0] = &k0;
                    best_k[1] = &k1;
                }
            }
            if (best_k[0] != &identity) {
                pre.push_back({best_k[0], {a}});
            }
            if (best_k[1] != &identity) {
                pre.push_back({best_k[1], {b}});
            }
            entanglers.push_back({gs.entangler, inst.targets});
            discrepancy[a] = &fuse_classes(*best->conj[0], *eq.post[0]);
            discrepancy[b] = &fuse_classes(*best->conj[1], *eq.post[1]);
        }
        out.append_layer(std::move(pre));
        out.append_layer(std::move(entanglers));
    }
    Layer last;
    for (size_t q = 0; q < n; q++) {
        if (discrepancy[q] != &identity) {
            last.push_back({discrepancy[q], {q}});
        }
    }
    out.append_layer(std::move(last));
    return out;
}

Circuit expand_to_natives(const Circuit &class_circuit, const GateSet &gs) {
    std::map<const GateDef *, SingleQubitDecomposition> cache;
    Circuit out(class_circuit.num_qubits);
    for (const auto &layer : class_circuit.layers) {
        std::vector<Layer> sub(1);
        for (const auto &inst : layer) {
            if (inst.gate->arity == 2) {
                sub[0].push_back(inst);
                continue;
            }
            auto it = cache.find(inst.gate);
            if (it == cache.end()) {
                it = cache.emplace(inst.gate, decompose_single_qubit(*inst.gate, gs)).first;
            }
            const auto &word = it->second.gates;
            if (word.size() > sub.size()) {
                sub.resize(word.size());
            }
            for (size_t i = 0; i < word.size(); i++) {
                sub[i].push_back({word[i], inst.targets});
            }
        }
        for (auto &s : sub) {
            out.append_layer(std::move(s));
        }
    }
    return out;
}

PauliProduct extract_frame(const Circuit &compiled, const Tableau &target) {
    size_t n = width(compiled, target);
    Tableau t = circuit_tableau(compiled, n);
    SignComparison cmp = equal_up_to_sign(t, target);
    if (!cmp.equal) {
        throw CompileError("extract_frame: tableaux differ beyond signs");
    }
    std::vector<PauliProduct> images = t.generator_images();
    return solve_frame(images, cmp.flips);
}

CompilationResult compile(const Circuit &source, const GateSet &gs, const CompileOptions &options) {
    Tableau target = circuit_tableau(source);
    std::string used;
    Circuit cls = class_compile(source, target, gs, options.strategy, used);
    CompilationResult result =
        finish(cls, target, gs, options, identity_permutation(source.num_qubits), two_qubit_count(source));
    result.strategy_used = used;
    return result;
}

CompilationResult compile_iswap_heuristic(const Circuit &source, const GateSet &gs, const CompileOptions &options) {
    std::optional<EntanglerClass> source_class;
    for (const auto &layer : source.layers) {
        for (const auto &inst : layer) {
            if (inst.gate->arity != 2) {
                continue;
            }
            EntanglerClass c = inst.gate->entangler_class;
            if (c != EntanglerClass::cx_like && c != EntanglerClass::iswap_like) {
                throw CompileError("unsupported source entangler " + inst.gate->name);
            }
            if (source_class.has_value() && *source_class != c) {
                throw CompileError("source mixes CX-like and iSWAP-like entanglers");
            }
            source_class = c;
        }
    }
    if (!source_class.has_value() || *source_class == gs.entangler->entangler_class) {
        return compile(source, gs, options);
    }

    auto composite = std::make_shared<GateDef>(
        make_gate(gs.entangler->name + "+SWAP", gs.entangler->semantics.then(builtin("SWAP").semantics)));
    if (composite->entangler_class != *source_class) {
        throw CompileError(composite->name + " does not match the source entangler class");
    }
    GateSet virtual_gs = make_gateset(gs.name + "+swap", composite, gs.natives);

    Tableau target = circuit_tableau(source);
    std::string used;
    Circuit cls = class_compile(source, target, virtual_gs, options.strategy, used);

    // Drop the virtual SWAPs: later gates follow the states they would have moved.
    size_t n = source.num_qubits;
    std::vector<size_t> perm = identity_permutation(n);
    Circuit routed(n);
    for (const auto &layer : cls.layers) {
        Layer out;
        std::vector<std::pair<size_t, size_t>> swaps;
        for (const auto &inst : layer) {
            std::vector<size_t> targets;
            for (size_t q : inst.targets) {
                targets.push_back(perm[q]);
            }
            if (inst.gate == composite.get()) {
                out.push_back({gs.entangler, targets});
                swaps.emplace_back(inst.targets[0], inst.targets[1]);
            } else {
                out.push_back({inst.gate, targets});
            }
        }
        routed.append_layer(std::move(out));
        for (auto [a, b] : swaps) {
            std::swap(perm[a], perm[b]);
        }
    }

    std::vector<std::pair<size_t, size_t>> flagged;
    if (!options.allowed_pairs.empty()) {
        for (const auto &layer : routed.layers) {
            for (const auto &inst : layer) {
                if (inst.gate->arity != 2) {
                    continue;
                }
                size_t a = inst.targets[0], b = inst.targets[1];
                bool ok = std::any_of(options.allowed_pairs.begin(), options.allowed_pairs.end(), [&](auto p) {
                    return (p.first == a && p.second == b) || (p.first == b && p.second == a);
                });
                if (!ok) {
                    flagged.emplace_back(a, b);
                }
            }
        }
    }

    CompilationResult result = finish(routed, target, gs, options, perm, two_qubit_count(source));
    result.strategy_used = used;
    result.flagged_pairs = std::move(flagged);
    return result;
}

}  // namespace tmc
