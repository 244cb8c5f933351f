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

#include "tmc/circuit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace tmc {

bool Instruction::operator==(const Instruction &other) const {
    return gate == other.gate && targets == other.targets;
}

void validate_layer(const Layer &layer, size_t num_qubits) {
    std::vector<bool> used(num_qubits, false);
    for (const auto &inst : layer) {
        if (inst.gate == nullptr) {
            throw std::invalid_argument("instruction without a gate");
        }
        if (inst.targets.size() != inst.gate->arity) {
            throw std::invalid_argument(inst.gate->name + " expects " + std::to_string(inst.gate->arity) +
                                        " targets");
        }
        for (size_t q : inst.targets) {
            if (q >= num_qubits) {
                throw std::invalid_argument("qubit " + std::to_string(q) + " out of range");
            }
            if (used[q]) {
                throw std::invalid_argument("qubit " + std::to_string(q) + " used twice in one layer");
            }
            used[q] = true;
        }
    }
}

void Circuit::append_layer(Layer layer) {
    if (layer.empty()) {
        return;
    }
    for (const auto &inst : layer) {
        for (size_t q : inst.targets) {
            num_qubits = std::max(num_qubits, q + 1);
        }
    }
    validate_layer(layer, num_qubits);
    layers.push_back(std::move(layer));
}

size_t Circuit::instruction_count() const {
    size_t total = 0;
    for (const auto &layer : layers) {
        total += layer.size();
    }
    return total;
}

Circuit Circuit::normalized() const {
    Circuit out = *this;
    for (auto &layer : out.layers) {
        std::stable_sort(layer.begin(), layer.end(), [](const Instruction &a, const Instruction &b) {
            if (a.gate->name != b.gate->name) {
                return a.gate->name < b.gate->name;
            }
            return a.targets.front() < b.targets.front();
        });
    }
    return out;
}

bool Circuit::operator==(const Circuit &other) const {
    return num_qubits == other.num_qubits && layers == other.layers;
}

ParseError::ParseError(size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

const std::set<std::string, std::less<>> &non_unitary_names() {
    static const std::set<std::string, std::less<>> names{
        "M",  "MX",   "MY",  "MZ",       "MR",       "MRX",        "MRY",   "MRZ",         "R",
        "RX", "RY",   "RZ",  "MPP",      "MXX",      "MYY",        "MZZ",   "DETECTOR",    "OBSERVABLE_INCLUDE",
        "SHIFT_COORDS",      "REPEAT",   "DEPOLARIZE1", "DEPOLARIZE2", "X_ERROR", "Y_ERROR", "Z_ERROR",
        "PAULI_CHANNEL_1",   "PAULI_CHANNEL_2", "E", "ELSE_CORRELATED_ERROR", "HERALDED_ERASE", "MPAD"};
    return names;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        if (k > start) {
            tokens.push_back(line.substr(start, k - start));
        }
    }
    return tokens;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    Layer current;
    std::vector<size_t> used_in_layer;  // line number (1-based) that last used each qubit in this layer
    size_t line_number = 0;
    auto close_layer = [&]() {
        c.append_layer(std::move(current));
        current.clear();
        used_in_layer.assign(used_in_layer.size(), 0);
    };

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_number++;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_whitespace(line);
        if (tokens.empty()) {
            continue;
        }
        std::string name(tokens[0]);
        for (char &ch : name) {
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        }
        if (name.rfind("QUBIT_COORDS", 0) == 0) {
            continue;
        }
        if (name == "TICK") {
            if (tokens.size() != 1) {
                throw ParseError(line_number, "TICK takes no targets");
            }
            close_layer();
            continue;
        }
        if (name.find('(') != std::string::npos) {
            throw ParseError(line_number, "parametric gate not supported: " + std::string(tokens[0]));
        }
        if (tokens.size() > 1 && tokens[1] == "{") {
            throw ParseError(line_number, "blocks are not supported");
        }
        const GateDef *gate = find_builtin(name);
        if (gate == nullptr) {
            if (non_unitary_names().count(name)) {
                throw ParseError(line_number, "non-unitary instruction not supported: " + name);
            }
            throw ParseError(line_number, "unknown gate: " + std::string(tokens[0]));
        }
        std::vector<size_t> targets;
        for (size_t k = 1; k < tokens.size(); k++) {
            std::string_view tok = tokens[k];
            size_t value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || value > (size_t{1} << 24)) {
                throw ParseError(line_number, "malformed target '" + std::string(tok) + "'");
            }
            targets.push_back(value);
        }
        if (targets.empty() || targets.size() % gate->arity != 0) {
            throw ParseError(line_number, gate->name + " needs a positive multiple of " +
                                              std::to_string(gate->arity) + " targets");
        }
        for (size_t k = 0; k < targets.size(); k += gate->arity) {
            Instruction inst{gate, std::vector<size_t>(targets.begin() + k, targets.begin() + k + gate->arity)};
            for (size_t q : inst.targets) {
                if (q >= used_in_layer.size()) {
                    used_in_layer.resize(q + 1, 0);
                }
                if (used_in_layer[q] != 0) {
                    throw ParseError(line_number, "qubit " + std::to_string(q) + " reused within a layer");
                }
                used_in_layer[q] = line_number;
            }
            current.push_back(std::move(inst));
        }
    }
    close_layer();
    return c;
}

Circuit expand_ecr(const Circuit &c) {
    const GateDef &ecr = builtin("ECR");
    const GateDef &s = builtin("S");
    const GateDef &sx = builtin("SQRT_X");
    const GateDef &cx = builtin("CX");
    const GateDef &x = builtin("X");
    Circuit out(c.num_qubits);
    for (const auto &layer : c.layers) {
        bool has_ecr = std::any_of(layer.begin(), layer.end(), [&](const Instruction &i) { return i.gate == &ecr; });
        if (!has_ecr) {
            out.append_layer(layer);
            continue;
        }
        Layer before, middle, after;
        for (const auto &inst : layer) {
            if (inst.gate != &ecr) {
                middle.push_back(inst);
                continue;
            }
            size_t a = inst.targets[0], b = inst.targets[1];
            before.push_back({&s, {a}});
            before.push_back({&sx, {b}});
            middle.push_back({&cx, {a, b}});
            after.push_back({&x, {a}});
        }
        out.append_layer(std::move(before));
        out.append_layer(std::move(middle));
        out.append_layer(std::move(after));
    }
    return out;
}

std::string emit_circuit(const Circuit &c, const EmitOptions &options) {
    Circuit normal = (options.expand_ecr ? expand_ecr(c) : c).normalized();
    std::ostringstream out;
    for (size_t k = 0; k < normal.layers.size(); k++) {
        if (k > 0) {
            out << "TICK\n";
        }
        const Layer &layer = normal.layers[k];
        for (size_t i = 0; i < layer.size();) {
            const GateDef *gate = layer[i].gate;
            out << gate->name;
            for (; i < layer.size() && layer[i].gate == gate; i++) {
                for (size_t q : layer[i].targets) {
                    out << ' ' << q;
                }
            }
            out << '\n';
        }
    }
    return out.str();
}

Tableau circuit_tableau(const Circuit &c) { return circuit_tableau(c, c.num_qubits); }

Tableau circuit_tableau(const Circuit &c, size_t num_qubits) {
    Tableau t(std::max(num_qubits, c.num_qubits));
    for (const auto &layer : c.layers) {
        for (const auto &inst : layer) {
            t.append(inst.gate->action, inst.targets);
        }
    }
    return t;
}

std::map<std::string, size_t> gate_counts(const Circuit &c) {
    std::map<std::string, size_t> counts;
    for (const auto &layer : c.layers) {
        for (const auto &inst : layer) {
            counts[inst.gate->name]++;
        }
    }
    return counts;
}

size_t two_qubit_count(const Circuit &c) {
    size_t total = 0;
    for (const auto &layer : c.layers) {
        for (const auto &inst : layer) {
            total += inst.gate->arity == 2;
        }
    }
    return total;
}

Circuit compact(const Circuit &c) {
    std::vector<size_t> next_free(c.num_qubits, 0);
    std::vector<Layer> layers;
    for (const auto &layer : c.layers) {
        for (const auto &inst : layer) {
            size_t slot = 0;
            for (size_t q : inst.targets) {
                slot = std::max(slot, next_free[q]);
            }
            if (slot >= layers.size()) {
                layers.resize(slot + 1);
            }
            layers[slot].push_back(inst);
            for (size_t q : inst.targets) {
                next_free[q] = slot + 1;
            }
        }
    }
    Circuit out(c.num_qubits);
    for (auto &layer : layers) {
        out.append_layer(std::move(layer));
    }
    return out;
}

Circuit concat(const Circuit &a, const Circuit &b) {
    Circuit out(std::max(a.num_qubits, b.num_qubits));
    for (const auto &layer : a.layers) {
        out.append_layer(layer);
    }
    for (const auto &layer : b.layers) {
        out.append_layer(layer);
    }
    return out;
}

namespace {

Instruction *find_on_wire(Layer &layer, size_t qubit) {
    for (auto &inst : layer) {
        if (std::find(inst.targets.begin(), inst.targets.end(), qubit) != inst.targets.end()) {
            return &inst;
        }
    }
    return nullptr;
}

bool all_single_qubit(const Layer &layer) {
    return std::all_of(layer.begin(), layer.end(), [](const Instruction &i) { return i.gate->arity == 1; });
}

}  // namespace

int insert_single_qubit_in_place(Circuit &c, size_t boundary, size_t qubit, const GateDef &g) {
    if (g.arity != 1) {
        throw std::invalid_argument("insert_single_qubit: " + g.name + " is not a single-qubit gate");
    }
    if (boundary > c.layers.size() || qubit >= c.num_qubits) {
        throw std::invalid_argument("insert_single_qubit: position out of range");
    }
    const GateDef &cls = class_of(g.semantics);
    if (cls.name == "I") {
        return 0;
    }

    auto fuse = [&](size_t layer_index, bool gate_first) {
        Layer &layer = c.layers[layer_index];
        Instruction *inst = find_on_wire(layer, qubit);
        const GateDef &old = class_of(inst->gate->semantics);
        const GateDef &fused = gate_first ? fuse_classes(cls, old) : fuse_classes(old, cls);
        if (fused.name != "I") {
            inst->gate = &fused;
            return 0;
        }
        layer.erase(layer.begin() + (inst - layer.data()));
        if (layer.empty()) {
            c.layers.erase(c.layers.begin() + layer_index);
            return -1;
        }
        return 0;
    };
    auto single_on_wire = [&](size_t layer_index) {
        Instruction *inst = find_on_wire(c.layers[layer_index], qubit);
        return inst != nullptr && inst->gate->arity == 1;
    };
    auto free_single_layer = [&](size_t layer_index) {
        return all_single_qubit(c.layers[layer_index]) && find_on_wire(c.layers[layer_index], qubit) == nullptr;
    };

    if (boundary > 0 && single_on_wire(boundary - 1)) {
        return fuse(boundary - 1, false);
    }
    if (boundary < c.layers.size() && single_on_wire(boundary)) {
        return fuse(boundary, true);
    }
    Instruction inst{&cls, {qubit}};
    if (boundary > 0 && free_single_layer(boundary - 1)) {
        c.layers[boundary - 1].push_back(inst);
        return 0;
    }
    if (boundary < c.layers.size() && free_single_layer(boundary)) {
        c.layers[boundary].push_back(inst);
        return 0;
    }
    c.layers.insert(c.layers.begin() + boundary, Layer{inst});
    return 1;
}

Circuit insert_single_qubit(const Circuit &c, size_t boundary, size_t qubit, const GateDef &g) {
    Circuit out = c;
    insert_single_qubit_in_place(out, boundary, qubit, g);
    return out;
}

}  // namespace tmc
