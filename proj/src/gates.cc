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

#include "tmc/gates.h"

#include <array>
#include <map>
#include <stdexcept>

namespace tmc {

namespace {

Tableau tableau_from_columns(size_t n, std::initializer_list<std::string_view> columns) {
    std::vector<std::string_view> cols(columns);
    return Tableau::from_text(n, cols);
}

bool is_local(const PauliProduct &p, size_t wire) {
    for (size_t q : support(p)) {
        if (q != wire) {
            return false;
        }
    }
    return true;
}

struct Registry {
    std::vector<std::unique_ptr<GateDef>> storage;
    std::vector<const GateDef *> order;
    std::map<std::string, const GateDef *, std::less<>> by_name;
    std::array<const GateDef *, 6> classes{};

    const GateDef &add(std::string name, Tableau semantics) {
        storage.push_back(std::make_unique<GateDef>(make_gate(name, std::move(semantics))));
        const GateDef *g = storage.back().get();
        order.push_back(g);
        by_name[g->name] = g;
        return *g;
    }
};

Registry build_registry() {
    Registry r;
    r.add("I", tableau_from_columns(1, {"+X0", "+Z0"}));
    r.add("X", tableau_from_columns(1, {"+X0", "-Z0"}));
    r.add("Y", tableau_from_columns(1, {"-X0", "-Z0"}));
    r.add("Z", tableau_from_columns(1, {"-X0", "+Z0"}));
    r.add("H", tableau_from_columns(1, {"+Z0", "+X0"}));
    r.add("S", tableau_from_columns(1, {"+Y0", "+Z0"}));
    r.add("S_DAG", tableau_from_columns(1, {"-Y0", "+Z0"}));
    r.add("SQRT_X", tableau_from_columns(1, {"+X0", "-Y0"}));
    r.add("SQRT_X_DAG", tableau_from_columns(1, {"+X0", "+Y0"}));
    r.add("H_XY", tableau_from_columns(1, {"+Y0", "-Z0"}));
    r.add("H_YZ", tableau_from_columns(1, {"-X0", "+Y0"}));
    r.add("C_XYZ", tableau_from_columns(1, {"+Y0", "+X0"}));
    r.add("C_ZYX", tableau_from_columns(1, {"+Z0", "+Y0"}));

    const GateDef &cx = r.add("CX", tableau_from_columns(2, {"+X0*X1", "+Z0", "+X1", "+Z0*Z1"}));
    r.by_name["CNOT"] = &cx;
    r.add("CZ", tableau_from_columns(2, {"+X0*Z1", "+Z0", "+Z0*X1", "+Z1"}));
    // exp(-i pi/4 X(x)X), frozen from its matrix.
    r.add("SQRT_XX", tableau_from_columns(2, {"+X0", "-Y0*X1", "+X1", "-X0*Y1"}));

    // ECR is defined by S (x) SQRT_X, then CX, then X on the first wire, and must
    // agree with its published tableau.
    Tableau ecr(2);
    ecr.append(r.by_name.at("S")->action, std::array<size_t, 1>{0});
    ecr.append(r.by_name.at("SQRT_X")->action, std::array<size_t, 1>{1});
    ecr.append(cx.action, std::array<size_t, 2>{0, 1});
    ecr.append(r.by_name.at("X")->action, std::array<size_t, 1>{0});
    Tableau ecr_expected = tableau_from_columns(2, {"-Y0*X1", "-Z0", "+X1", "+Z0*Y1"});
    if (ecr != ecr_expected) {
        throw std::logic_error("ECR composition disagrees with its defining tableau:\n" + ecr.str());
    }
    r.add("ECR", std::move(ecr));

    r.add("ISWAP", tableau_from_columns(2, {"+Z0*Y1", "+Z1", "+Y0*Z1", "+Z0"}));
    r.add("SWAP", tableau_from_columns(2, {"+X1", "+Z1", "+X0", "+Z0"}));
    r.add("CXSWAP", tableau_from_columns(2, {"+X0*X1", "+Z1", "+X0", "+Z0*Z1"}));
    r.add("CZSWAP", tableau_from_columns(2, {"+Z0*X1", "+Z1", "+X0*Z1", "+Z0"}));

    const char *class_names[6] = {"I", "H", "H_XY", "H_YZ", "C_XYZ", "C_ZYX"};
    for (size_t k = 0; k < 6; k++) {
        r.classes[k] = r.by_name.at(class_names[k]);
    }
    return r;
}

const Registry &registry() {
    static const Registry r = build_registry();
    return r;
}

}  // namespace

std::string_view entangler_class_name(EntanglerClass c) {
    switch (c) {
        case EntanglerClass::none:
            return "none";
        case EntanglerClass::cx_like:
            return "cx_like";
        case EntanglerClass::iswap_like:
            return "iswap_like";
        case EntanglerClass::swap_like:
            return "swap_like";
    }
    return "?";
}

bool GateDef::is_pauli() const {
    if (arity != 1) {
        return false;
    }
    return semantics.x_image(0).get(0) == Pauli::X && semantics.z_image(0).get(0) == Pauli::Z;
}

GateDef make_gate(std::string name, Tableau semantics) {
    GateDef g;
    g.name = std::move(name);
    g.arity = semantics.num_qubits();
    if (g.arity != 1 && g.arity != 2) {
        throw std::invalid_argument("gates must act on one or two qubits");
    }
    if (!semantics.satisfies_symplectic_condition()) {
        throw std::invalid_argument("gate tableau violates the symplectic condition");
    }
    g.action = LocalAction::from_tableau(semantics);
    if (g.arity == 2) {
        std::array<size_t, 2> swap{1, 0};
        g.symmetric = semantics.permute_qubits(swap) == semantics;
        g.entangler_class = classify_entangler(semantics);
    }
    g.semantics = std::move(semantics);
    return g;
}

const GateDef *find_builtin(std::string_view name) {
    const auto &r = registry();
    auto it = r.by_name.find(name);
    return it == r.by_name.end() ? nullptr : it->second;
}

const GateDef &builtin(std::string_view name) {
    const GateDef *g = find_builtin(name);
    if (g == nullptr) {
        throw std::invalid_argument("unknown gate: " + std::string(name));
    }
    return *g;
}

std::span<const GateDef *const> all_builtins() { return registry().order; }

EntanglerClass classify_entangler(const Tableau &t) {
    if (t.num_qubits() != 2) {
        return EntanglerClass::none;
    }
    bool stays = is_local(t.x_image(0), 0) && is_local(t.z_image(0), 0) && is_local(t.x_image(1), 1) &&
                 is_local(t.z_image(1), 1);
    if (stays) {
        return EntanglerClass::none;
    }
    bool swaps = is_local(t.x_image(0), 1) && is_local(t.z_image(0), 1) && is_local(t.x_image(1), 0) &&
                 is_local(t.z_image(1), 0);
    if (swaps) {
        return EntanglerClass::swap_like;
    }
    if (commuting_local_pauli(t, 0).has_value() && commuting_local_pauli(t, 1).has_value()) {
        return EntanglerClass::cx_like;
    }
    return EntanglerClass::iswap_like;
}

std::optional<Pauli> commuting_local_pauli(const Tableau &t, size_t wire) {
    if (t.num_qubits() != 2 || wire > 1) {
        return std::nullopt;
    }
    std::optional<Pauli> found;
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        if (is_local(t.conjugate(PauliProduct::single(2, wire, p)), wire)) {
            if (found.has_value()) {
                return std::nullopt;
            }
            found = p;
        }
    }
    return found;
}

std::optional<Pauli> commuting_local_pauli(const GateDef &g, size_t wire) {
    return commuting_local_pauli(g.semantics, wire);
}

const GateDef &class_gate(Pauli x_image, Pauli z_image) {
    if (!anticommute(x_image, z_image)) {
        throw std::invalid_argument("class_gate: images must be anticommuting non-identity Paulis");
    }
    for (const GateDef *g : registry().classes) {
        if (g->semantics.x_image(0).get(0) == x_image && g->semantics.z_image(0).get(0) == z_image) {
            return *g;
        }
    }
    throw std::logic_error("class table incomplete");
}

const GateDef &class_of(const Tableau &t) {
    if (t.num_qubits() != 1) {
        throw std::invalid_argument("class_of needs a single-qubit tableau");
    }
    return class_gate(t.x_image(0).get(0), t.z_image(0).get(0));
}

const GateDef &fuse_classes(const GateDef &first, const GateDef &second) {
    return class_of(first.semantics.then(second.semantics));
}

std::span<const GateDef *const> class_gates() { return registry().classes; }

Pauli class_image(const GateDef &g, Pauli p) {
    if (p == Pauli::I) {
        return Pauli::I;
    }
    return g.semantics.conjugate(PauliProduct::single(1, 0, p)).get(0);
}

namespace {

std::vector<Tableau> closure(std::span<const GateDef *const> natives) {
    std::vector<Tableau> seen{Tableau(1)};
    for (size_t k = 0; k < seen.size(); k++) {
        for (const GateDef *g : natives) {
            Tableau next = seen[k].then(g->semantics);
            bool known = false;
            for (const auto &s : seen) {
                if (s == next) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                seen.push_back(std::move(next));
            }
        }
    }
    return seen;
}

}  // namespace

GateSet make_gateset(std::string name, const GateDef &entangler, std::vector<const GateDef *> natives) {
    if (entangler.arity != 2 ||
        (entangler.entangler_class != EntanglerClass::cx_like &&
         entangler.entangler_class != EntanglerClass::iswap_like)) {
        throw std::invalid_argument("gateset entangler must be an entangling two-qubit gate: " + entangler.name);
    }
    for (const GateDef *g : natives) {
        if (g->arity != 1) {
            throw std::invalid_argument("native single-qubit gate has arity 2: " + g->name);
        }
    }
    if (closure(natives).size() != 24) {
        throw std::invalid_argument("native single-qubit gates of '" + name +
                                    "' do not generate the single-qubit Clifford group");
    }
    GateSet gs;
    gs.name = std::move(name);
    gs.entangler = &entangler;
    gs.natives = std::move(natives);
    return gs;
}

GateSet make_gateset(std::string name, std::shared_ptr<const GateDef> entangler, std::vector<const GateDef *> natives) {
    GateSet gs = make_gateset(std::move(name), *entangler, std::move(natives));
    gs.owned_entangler = std::move(entangler);
    return gs;
}

const GateDef &entangler_by_target_name(std::string_view target) {
    static const std::map<std::string, std::string, std::less<>> names{
        {"cx", "CX"}, {"cz", "CZ"}, {"sqrt_xx", "SQRT_XX"}, {"ecr", "ECR"}, {"iswap", "ISWAP"}};
    auto it = names.find(target);
    if (it == names.end()) {
        throw std::invalid_argument("unknown target gateset: " + std::string(target) +
                                    " (expected cx, cz, sqrt_xx, ecr or iswap)");
    }
    return builtin(it->second);
}

GateSet gateset_by_name(std::string_view target, std::string_view natives) {
    const GateDef &entangler = entangler_by_target_name(target);
    std::vector<const GateDef *> singles;
    if (natives == "s_sx") {
        singles = {&builtin("S"), &builtin("SQRT_X")};
    } else if (natives == "class6") {
        singles = {&builtin("H"), &builtin("H_XY"), &builtin("H_YZ"), &builtin("C_XYZ"), &builtin("C_ZYX")};
    } else {
        throw std::invalid_argument("unknown native set: " + std::string(natives) + " (expected s_sx or class6)");
    }
    return make_gateset(std::string(target) + "/" + std::string(natives), entangler, std::move(singles));
}

SingleQubitDecomposition decompose_single_qubit(const GateDef &g, std::span<const GateDef *const> natives) {
    if (g.arity != 1) {
        throw std::invalid_argument("decompose_single_qubit: " + g.name + " is not a single-qubit gate");
    }
    const size_t max_length = 6;
    std::vector<size_t> word;
    for (size_t length = 0; length <= max_length; length++) {
        word.assign(length, 0);
        while (true) {
            Tableau t(1);
            for (size_t k : word) {
                t = t.then(natives[k]->semantics);
            }
            if (t.x_image(0).equal_up_to_sign(g.semantics.x_image(0)) &&
                t.z_image(0).equal_up_to_sign(g.semantics.z_image(0))) {
                SingleQubitDecomposition result;
                for (size_t k : word) {
                    result.gates.push_back(natives[k]);
                }
                bool flip_x = t.x_image(0).negative() != g.semantics.x_image(0).negative();
                bool flip_z = t.z_image(0).negative() != g.semantics.z_image(0).negative();
                for (Pauli r : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
                    if (anticommute(r, t.x_image(0).get(0)) == flip_x &&
                        anticommute(r, t.z_image(0).get(0)) == flip_z) {
                        result.residual = r;
                        break;
                    }
                }
                return result;
            }
            // Advance to the next word of this length, last position fastest.
            size_t pos = length;
            while (pos > 0 && word[pos - 1] + 1 == natives.size()) {
                word[--pos] = 0;
            }
            if (pos == 0 || natives.empty()) {
                break;
            }
            word[pos - 1]++;
        }
    }
    throw std::invalid_argument("decompose_single_qubit: natives do not generate " + g.name);
}

SingleQubitDecomposition decompose_single_qubit(const GateDef &g, const GateSet &gs) {
    return decompose_single_qubit(g, gs.natives);
}

std::vector<GateDef> all_single_qubit_cliffords() {
    std::array<const GateDef *, 2> gens{&builtin("S"), &builtin("SQRT_X")};
    std::vector<GateDef> result;
    for (Tableau &t : closure(gens)) {
        std::string name;
        for (const GateDef *g : all_builtins()) {
            if (g->arity == 1 && g->semantics == t) {
                name = g->name;
                break;
            }
        }
        if (name.empty()) {
            const GateDef &cls = class_of(t);
            for (const char *p : {"X", "Y", "Z"}) {
                Tableau candidate = cls.semantics.then(builtin(p).semantics);
                if (candidate == t) {
                    name = cls.name + "*" + p;
                    break;
                }
            }
        }
        result.push_back(make_gate(name, std::move(t)));
    }
    return result;
}

}  // namespace tmc
