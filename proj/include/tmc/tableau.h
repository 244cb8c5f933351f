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

#ifndef _TMC_TABLEAU_H
#define _TMC_TABLEAU_H

#include <array>
#include <span>
#include <string>
#include <vector>

#include "tmc/pauli.h"

namespace tmc {

class Tableau;

/// Action of a one- or two-qubit Clifford on local Paulis, tabulated so it can
/// be applied to wide products without any general multiplication.
///
/// Index layout: bits 0-1 hold the Pauli on the first target (x, z), bits 2-3
/// the Pauli on the second target.
struct LocalAction {
    size_t arity = 0;
    std::array<uint8_t, 16> image{};
    std::array<bool, 16> negate{};

    static LocalAction from_tableau(const Tableau &t);
    void apply(PauliProduct &p, std::span<const size_t> targets) const;
};

/// Images of the 2n generators X_j, Z_j under a unitary Clifford C, using the
/// convention P -> C P C^dagger with gates applied left to right.
///
/// Layout mirrors the usual tableau picture: column X_j is `x_image(j)`, column Z_j is
/// `z_image(j)`, and the entry in row w of a column is that image's Pauli on
/// wire w (see `local`). Only columns are stored; rows are read on demand.
class Tableau {
   public:
    Tableau() = default;
    /// Identity tableau on n qubits.
    explicit Tableau(size_t num_qubits);
    static Tableau identity(size_t num_qubits) { return Tableau(num_qubits); }
    /// Builds a tableau from explicit columns. Throws std::invalid_argument if
    /// the sizes disagree or the symplectic condition fails.
    static Tableau from_images(std::vector<PauliProduct> x_images, std::vector<PauliProduct> z_images);
    /// Parses columns written as Pauli product text, e.g. {"+X0*X1", "+Z0", "+X1", "+Z0*Z1"}
    /// for X_0, Z_0, X_1, Z_1.
    static Tableau from_text(size_t num_qubits, std::span<const std::string_view> columns);

    size_t num_qubits() const { return x_images_.size(); }
    const PauliProduct &x_image(size_t q) const { return x_images_[q]; }
    const PauliProduct &z_image(size_t q) const { return z_images_[q]; }
    /// Generator image in SignVector order (X_0, Z_0, X_1, ...).
    const PauliProduct &image(size_t g) const { return g % 2 == 0 ? x_images_[g / 2] : z_images_[g / 2]; }
    std::vector<PauliProduct> generator_images() const;
    SignVector signs() const;

    /// Row view: the Pauli that the image of X_gen (or Z_gen) places on `wire`.
    Pauli local(size_t gen, bool z_generator, size_t wire) const;

    /// Image of an arbitrary product. Throws std::invalid_argument on a size
    /// mismatch and std::domain_error if the result is not Hermitian (only
    /// possible for a malformed tableau).
    PauliProduct conjugate(const PauliProduct &p) const;

    /// Applies a gate after everything already in the tableau.
    void append(const LocalAction &gate, std::span<const size_t> targets);
    void append(const Tableau &gate, std::span<const size_t> targets);
    /// Appends a Pauli layer: flips the sign of every image that anticommutes with p.
    void append_pauli(const PauliProduct &p);

    /// The tableau of running *this and then `second`.
    Tableau then(const Tableau &second) const;
    Tableau inverse() const;

    /// Relabels qubit q as perm[q] on both the input generators and the image supports.
    Tableau permute_qubits(std::span<const size_t> perm) const;
    /// Relabels only the image supports: output wire w becomes perm[w].
    Tableau relabel_outputs(std::span<const size_t> perm) const;

    bool satisfies_symplectic_condition() const;

    bool operator==(const Tableau &other) const = default;

    /// Table layout with a sign row and one row per wire; `_` marks identity.
    std::string str() const;

   private:
    std::vector<PauliProduct> x_images_;
    std::vector<PauliProduct> z_images_;
};

struct SignComparison {
    /// True when every image has the same letters in both tableaux.
    bool equal = false;
    /// Entry g is -1 where the two images of generator g differ in sign.
    SignVector flips;
};

bool equal(const Tableau &a, const Tableau &b);
SignComparison equal_up_to_sign(const Tableau &a, const Tableau &b);

/// Throws std::invalid_argument unless perm is a bijection on 0..n-1.
void validate_permutation(std::span<const size_t> perm, size_t n);

}  // namespace tmc

#endif
