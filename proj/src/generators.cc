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

#include "tmc/generators.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tmc {

namespace {

constexpr std::pair<int, int> kXOrder[4] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
constexpr std::pair<int, int> kZOrder[4] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};

// Portable bounded draw; the modulo bias is irrelevant at these sizes.
size_t draw(std::mt19937_64 &rng, size_t bound) { return static_cast<size_t>(rng() % bound); }

}  // namespace

SurfaceCodeLayout surface_code_layout(size_t distance) {
    if (distance < 3 || distance % 2 == 0) {
        throw std::invalid_argument("surface code distance must be odd and at least 3");
    }
    int d = static_cast<int>(distance);
    SurfaceCodeLayout layout;
    layout.distance = distance;
    for (int j = 0; j < d; j++) {
        for (int i = 0; i < d; i++) {
            layout.data.push_back(layout.coords.size());
            layout.coords.emplace_back(2 * i + 1, 2 * j + 1);
        }
    }
    for (int j = 0; j <= d; j++) {
        for (int i = 0; i <= d; i++) {
            bool x_type = (i + j) % 2 == 1;
            bool interior = i > 0 && i < d && j > 0 && j < d;
            bool keep = interior || (x_type && (j == 0 || j == d) && i > 0 && i < d) ||
                        (!x_type && (i == 0 || i == d) && j > 0 && j < d);
            if (!keep) {
                continue;
            }
            (x_type ? layout.x_ancillas : layout.z_ancillas).push_back(layout.coords.size());
            layout.coords.emplace_back(2 * i, 2 * j);
        }
    }
    return layout;
}

std::vector<size_t> SurfaceCodeLayout::schedule(size_t a) const {
    bool x_type = std::find(x_ancillas.begin(), x_ancillas.end(), a) != x_ancillas.end();
    const auto &order = x_type ? kXOrder : kZOrder;
    auto [x, y] = coords[a];
    int d = static_cast<int>(distance);
    std::vector<size_t> result;
    for (const auto &[dx, dy] : order) {
        int nx = x + dx, ny = y + dy;
        if (nx < 0 || ny < 0 || nx >= 2 * d || ny >= 2 * d) {
            result.push_back(SIZE_MAX);
        } else {
            int i = (nx - 1) / 2, j = (ny - 1) / 2;
            result.push_back(static_cast<size_t>(j * d + i));
        }
    }
    return result;
}

Circuit surface_code_syndrome_extraction(size_t distance) {
    SurfaceCodeLayout layout = surface_code_layout(distance);
    const GateDef &h = builtin("H");
    const GateDef &cx = builtin("CX");
    Circuit c(layout.num_qubits());
    Layer hadamards;
    for (size_t a : layout.x_ancillas) {
        hadamards.push_back({&h, {a}});
    }
    c.append_layer(hadamards);
    for (size_t t = 0; t < 4; t++) {
        Layer layer;
        for (size_t a : layout.x_ancillas) {
            size_t q = layout.schedule(a)[t];
            if (q != SIZE_MAX) {
                layer.push_back({&cx, {a, q}});
            }
        }
        for (size_t a : layout.z_ancillas) {
            size_t q = layout.schedule(a)[t];
            if (q != SIZE_MAX) {
                layer.push_back({&cx, {q, a}});
            }
        }
        c.append_layer(std::move(layer));
    }
    c.append_layer(hadamards);
    return c;
}

std::string surface_code_text(size_t distance) {
    SurfaceCodeLayout layout = surface_code_layout(distance);
    std::ostringstream out;
    for (size_t q = 0; q < layout.num_qubits(); q++) {
        out << "QUBIT_COORDS(" << layout.coords[q].first << ", " << layout.coords[q].second << ") " << q << "\n";
    }
    out << emit_circuit(surface_code_syndrome_extraction(distance));
    return out.str();
}

Circuit random_clifford_circuit(const RandomCircuitSpec &spec) {
    if (spec.num_qubits < 2) {
        throw std::invalid_argument("random circuits need at least two qubits");
    }
    if (spec.entangler == nullptr || spec.entangler->arity != 2) {
        throw std::invalid_argument("random circuits need a two-qubit entangler");
    }
    size_t n = spec.num_qubits;
    std::mt19937_64 rng(spec.seed);
    const char *paulis[4] = {"I", "X", "Y", "Z"};
    Circuit c(n);
    auto single_qubit_layers = [&]() {
        Layer classes, frame;
        for (size_t q = 0; q < n; q++) {
            const GateDef *cls = class_gates()[draw(rng, 6)];
            const GateDef &p = builtin(paulis[draw(rng, 4)]);
            if (cls->name != "I") {
                classes.push_back({cls, {q}});
            }
            if (p.name != "I") {
                frame.push_back({&p, {q}});
            }
        }
        c.append_layer(std::move(classes));
        c.append_layer(std::move(frame));
    };
    single_qubit_layers();
    for (size_t l = 0; l < spec.entangler_layers; l++) {
        std::vector<size_t> order(n);
        for (size_t q = 0; q < n; q++) {
            order[q] = q;
        }
        for (size_t k = n - 1; k > 0; k--) {
            std::swap(order[k], order[draw(rng, k + 1)]);
        }
        size_t pairs = 1 + draw(rng, n / 2);
        Layer layer;
        for (size_t p = 0; p < pairs; p++) {
            layer.push_back({spec.entangler, {order[2 * p], order[2 * p + 1]}});
        }
        c.append_layer(std::move(layer));
        single_qubit_layers();
    }
    c.num_qubits = n;
    return c;
}

}  // namespace tmc
