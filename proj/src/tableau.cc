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

#include "tmc/tableau.h"

#include <algorithm>
#include <stdexcept>

namespace tmc {

namespace {

uint8_t local_index(const PauliProduct &p, std::span<const size_t> targets) {
    uint8_t index = 0;
    for (size_t k = 0; k < targets.size(); k++) {
        index |= static_cast<uint8_t>(p.get(targets[k])) << (2 * k);
    }
    return index;
}

PauliProduct relabel(const PauliProduct &p, std::span<const size_t> perm) {
    PauliProduct out(p.num_qubits());
    out.set_negative(p.negative());
    for (size_t q : support(p)) {
        out.set(perm[q], p.get(q));
    }
    return out;
}

}  // namespace

LocalAction LocalAction::from_tableau(const Tableau &t) {
    if (t.num_qubits() != 1 && t.num_qubits() != 2) {
        throw std::invalid_argument("LocalAction needs a one- or two-qubit tableau");
    }
    LocalAction action;
    action.arity = t.num_qubits();
    size_t count = size_t{1} << (2 * action.arity);
    for (size_t index = 0; index < count; index++) {
        PauliProduct p(action.arity);
        for (size_t k = 0; k < action.arity; k++) {
            p.set(k, static_cast<Pauli>((index >> (2 * k)) & 3));
        }
        PauliProduct img = t.conjugate(p);
        uint8_t bits = 0;
        for (size_t k = 0; k < action.arity; k++) {
            bits |= static_cast<uint8_t>(img.get(k)) << (2 * k);
        }
        action.image[index] = bits;
        action.negate[index] = img.negative();
    }
    return action;
}

void LocalAction::apply(PauliProduct &p, std::span<const size_t> targets) const {
    uint8_t index = local_index(p, targets);
    if (index == 0) {
        return;
    }
    uint8_t bits = image[index];
    for (size_t k = 0; k < arity; k++) {
        p.set(targets[k], static_cast<Pauli>((bits >> (2 * k)) & 3));
    }
    if (negate[index]) {
        p.flip_sign();
    }
}

Tableau::Tableau(size_t num_qubits) {
    x_images_.reserve(num_qubits);
    z_images_.reserve(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        x_images_.push_back(PauliProduct::single(num_qubits, q, Pauli::X));
        z_images_.push_back(PauliProduct::single(num_qubits, q, Pauli::Z));
    }
}

Tableau Tableau::from_images(std::vector<PauliProduct> x_images, std::vector<PauliProduct> z_images) {
    size_t n = x_images.size();
    if (z_images.size() != n) {
        throw std::invalid_argument("tableau needs the same number of X and Z images");
    }
    for (size_t q = 0; q < n; q++) {
        if (x_images[q].num_qubits() != n || z_images[q].num_qubits() != n) {
            throw std::invalid_argument("tableau image has the wrong qubit count");
        }
    }
    Tableau t;
    t.x_images_ = std::move(x_images);
    t.z_images_ = std::move(z_images);
    if (!t.satisfies_symplectic_condition()) {
        throw std::invalid_argument("tableau images violate the symplectic condition");
    }
    return t;
}

Tableau Tableau::from_text(size_t num_qubits, std::span<const std::string_view> columns) {
    if (columns.size() != 2 * num_qubits) {
        throw std::invalid_argument("expected 2n tableau columns");
    }
    std::vector<PauliProduct> xs, zs;
    for (size_t q = 0; q < num_qubits; q++) {
        xs.push_back(PauliProduct::from_text(columns[2 * q], num_qubits));
        zs.push_back(PauliProduct::from_text(columns[2 * q + 1], num_qubits));
    }
    return from_images(std::move(xs), std::move(zs));
}

std::vector<PauliProduct> Tableau::generator_images() const {
    std::vector<PauliProduct> out;
    out.reserve(2 * num_qubits());
    for (size_t q = 0; q < num_qubits(); q++) {
        out.push_back(x_images_[q]);
        out.push_back(z_images_[q]);
    }
    return out;
}

SignVector Tableau::signs() const {
    SignVector out(num_qubits());
    for (size_t g = 0; g < out.size(); g++) {
        out.set(g, image(g).sign());
    }
    return out;
}

Pauli Tableau::local(size_t gen, bool z_generator, size_t wire) const {
    return (z_generator ? z_images_[gen] : x_images_[gen]).get(wire);
}

PauliProduct Tableau::conjugate(const PauliProduct &p) const {
    size_t n = num_qubits();
    if (p.num_qubits() != n) {
        throw std::invalid_argument("conjugate: product size does not match tableau");
    }
    PauliProduct acc(n);
    int log_i = p.negative() ? 2 : 0;
    for (size_t q : support(p)) {
        Pauli letter = p.get(q);
        if (has_x(letter)) {
            log_i += inplace_right_mul_log_i(acc, x_images_[q]);
        }
        if (has_z(letter)) {
            log_i += inplace_right_mul_log_i(acc, z_images_[q]);
        }
        if (letter == Pauli::Y) {
            // Y = i X Z
            log_i += 1;
        }
    }
    log_i &= 3;
    if (log_i & 1) {
        throw std::domain_error("conjugate: non-Hermitian result; tableau is malformed");
    }
    acc.set_negative(log_i == 2);
    return acc;
}

void Tableau::append(const LocalAction &gate, std::span<const size_t> targets) {
    if (targets.size() != gate.arity) {
        throw std::invalid_argument("append: target count does not match gate arity");
    }
    for (size_t t : targets) {
        if (t >= num_qubits()) {
            throw std::invalid_argument("append: target out of range");
        }
    }
    if (gate.arity == 2 && targets[0] == targets[1]) {
        throw std::invalid_argument("append: repeated target");
    }
    for (auto &img : x_images_) {
        gate.apply(img, targets);
    }
    for (auto &img : z_images_) {
        gate.apply(img, targets);
    }
}

void Tableau::append(const Tableau &gate, std::span<const size_t> targets) {
    append(LocalAction::from_tableau(gate), targets);
}

void Tableau::append_pauli(const PauliProduct &p) {
    for (auto &img : x_images_) {
        if (!commutes(img, p)) {
            img.flip_sign();
        }
    }
    for (auto &img : z_images_) {
        if (!commutes(img, p)) {
            img.flip_sign();
        }
    }
}

Tableau Tableau::then(const Tableau &second) const {
    if (second.num_qubits() != num_qubits()) {
        throw std::invalid_argument("then: tableau size mismatch");
    }
    Tableau out;
    for (size_t q = 0; q < num_qubits(); q++) {
        out.x_images_.push_back(second.conjugate(x_images_[q]));
        out.z_images_.push_back(second.conjugate(z_images_[q]));
    }
    return out;
}

Tableau Tableau::inverse() const {
    size_t n = num_qubits();
    // The preimage Q of an output generator is fixed by commutation with the
    // images: Q anticommutes with X_k iff the output anticommutes with image(X_k).
    auto preimage = [&](bool z_generator, size_t j) {
        PauliProduct q(n);
        for (size_t k = 0; k < n; k++) {
            bool anti_x = z_generator ? x_images_[k].x(j) : x_images_[k].z(j);
            bool anti_z = z_generator ? z_images_[k].x(j) : z_images_[k].z(j);
            q.set(k, pauli_from_bits(anti_z, anti_x));
        }
        PauliProduct img = conjugate(q);
        q.set_negative(img.negative());
        return q;
    };
    Tableau out;
    for (size_t j = 0; j < n; j++) {
        out.x_images_.push_back(preimage(false, j));
        out.z_images_.push_back(preimage(true, j));
    }
    return out;
}

void validate_permutation(std::span<const size_t> perm, size_t n) {
    if (perm.size() != n) {
        throw std::invalid_argument("permutation has the wrong length");
    }
    std::vector<bool> seen(n, false);
    for (size_t v : perm) {
        if (v >= n || seen[v]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[v] = true;
    }
}

Tableau Tableau::permute_qubits(std::span<const size_t> perm) const {
    size_t n = num_qubits();
    validate_permutation(perm, n);
    Tableau out(n);
    for (size_t q = 0; q < n; q++) {
        out.x_images_[perm[q]] = relabel(x_images_[q], perm);
        out.z_images_[perm[q]] = relabel(z_images_[q], perm);
    }
    return out;
}

Tableau Tableau::relabel_outputs(std::span<const size_t> perm) const {
    validate_permutation(perm, num_qubits());
    Tableau out;
    for (size_t q = 0; q < num_qubits(); q++) {
        out.x_images_.push_back(relabel(x_images_[q], perm));
        out.z_images_.push_back(relabel(z_images_[q], perm));
    }
    return out;
}

bool Tableau::satisfies_symplectic_condition() const {
    size_t n = num_qubits();
    std::vector<PauliProduct> images = generator_images();
    for (size_t a = 0; a < 2 * n; a++) {
        for (size_t b = a + 1; b < 2 * n; b++) {
            bool should_anticommute = (a % 2 == 0) && b == a + 1;
            if (commutes(images[a], images[b]) == should_anticommute) {
                return false;
            }
        }
    }
    return true;
}

std::string Tableau::str() const {
    size_t n = num_qubits();
    size_t label_width = std::max<size_t>(2, std::to_string(n == 0 ? 0 : n - 1).size());
    auto pad = [](std::string s, size_t width) {
        s.resize(std::max(width, s.size()), ' ');
        return s;
    };
    auto trim = [](std::string s) {
        while (!s.empty() && s.back() == ' ') {
            s.pop_back();
        }
        return s + "\n";
    };
    std::vector<size_t> widths(n);
    std::string header = pad("", label_width);
    std::string sign_row = pad("+-", label_width);
    for (size_t q = 0; q < n; q++) {
        std::string index = std::to_string(q);
        widths[q] = index.size() + 1;
        header += " | X" + index + " Z" + index;
        sign_row += " | " + pad(x_images_[q].negative() ? "-" : "+", widths[q]) + " " +
                    pad(z_images_[q].negative() ? "-" : "+", widths[q]);
    }
    std::string out = trim(header) + trim(sign_row);
    for (size_t w = 0; w < n; w++) {
        std::string row = pad(std::to_string(w), label_width);
        for (size_t q = 0; q < n; q++) {
            auto cell = [&](Pauli p) { return pad(std::string(1, p == Pauli::I ? '_' : pauli_char(p)), widths[q]); };
            row += " | " + cell(x_images_[q].get(w)) + " " + cell(z_images_[q].get(w));
        }
        out += trim(row);
    }
    return out;
}

bool equal(const Tableau &a, const Tableau &b) { return a == b; }

SignComparison equal_up_to_sign(const Tableau &a, const Tableau &b) {
    SignComparison result;
    if (a.num_qubits() != b.num_qubits()) {
        return result;
    }
    result.flips = SignVector(a.num_qubits());
    for (size_t g = 0; g < 2 * a.num_qubits(); g++) {
        if (!a.image(g).equal_up_to_sign(b.image(g))) {
            result.flips = SignVector(a.num_qubits());
            return result;
        }
        if (a.image(g).negative() != b.image(g).negative()) {
            result.flips.set(g, -1);
        }
    }
    result.equal = true;
    return result;
}

}  // namespace tmc
