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

#ifndef _TMC_PAULI_H
#define _TMC_PAULI_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tmc {

/// Single-qubit Pauli. Bit 0 is the X component and bit 1 the Z component,
/// so `Y == X | Z` matches the binary symplectic convention.
enum class Pauli : uint8_t {
    I = 0,
    X = 1,
    Z = 2,
    Y = 3,
};

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
inline bool has_x(Pauli p) { return (static_cast<uint8_t>(p) & 1) != 0; }
inline bool has_z(Pauli p) { return (static_cast<uint8_t>(p) & 2) != 0; }
inline Pauli pauli_from_bits(bool x, bool z) { return static_cast<Pauli>(uint8_t(x) | (uint8_t(z) << 1)); }
/// The third non-identity Pauli, e.g. X,Z -> Y. Identity if a == b.
inline Pauli pauli_xor(Pauli a, Pauli b) {
    return static_cast<Pauli>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}
bool anticommute(Pauli a, Pauli b);

/// A signed Hermitian Pauli operator over n qubits, stored as packed x/z bit
/// vectors. Qubit q carries Y iff both its x and z bits are set.
class PauliProduct {
   public:
    PauliProduct() = default;
    /// Identity on `num_qubits` qubits with a + sign.
    explicit PauliProduct(size_t num_qubits);
    static PauliProduct single(size_t num_qubits, size_t qubit, Pauli p);

    /// Parses the textual syntax `[+|-](I | P<q>(*P<q>)*)`, e.g. `-X0*Y2`.
    /// A missing sign means +. Qubit indices must be < num_qubits and unique.
    static PauliProduct from_text(std::string_view text, size_t num_qubits);

    size_t num_qubits() const { return num_qubits_; }
    Pauli get(size_t q) const;
    void set(size_t q, Pauli p);
    bool x(size_t q) const;
    bool z(size_t q) const;

    bool negative() const { return negative_; }
    int sign() const { return negative_ ? -1 : +1; }
    void set_negative(bool negative) { negative_ = negative; }
    void flip_sign() { negative_ = !negative_; }

    bool is_identity() const;
    size_t weight() const;
    /// Equal letters on every qubit; the sign is ignored.
    bool equal_up_to_sign(const PauliProduct &other) const;

    bool operator==(const PauliProduct &other) const;
    bool operator!=(const PauliProduct &other) const { return !(*this == other); }

    /// Sign-prefixed text, e.g. "+X0*Z3" or "+I".
    std::string str() const;
    /// Text without the sign, e.g. "X0*Z3" or "I".
    std::string letters() const;

    std::span<const uint64_t> x_words() const { return xs_; }
    std::span<const uint64_t> z_words() const { return zs_; }

   private:
    size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    bool negative_ = false;

    friend uint8_t inplace_right_mul_log_i(PauliProduct &lhs, const PauliProduct &rhs);
};

/// A Pauli product together with an optional factor of i.
/// The represented operator is `(imaginary ? i : 1) * pauli`.
struct PhasedProduct {
    PauliProduct pauli;
    bool imaginary = false;
};

/// Replaces `lhs` with the letters of `lhs * rhs` (sign cleared) and returns the
/// exponent k in {0,1,2,3} such that the true product equals i^k times the new
/// letters. Signs of both operands are included in k.
uint8_t inplace_right_mul_log_i(PauliProduct &lhs, const PauliProduct &rhs);

/// Operator product a*b with exact phase. Throws std::invalid_argument on size mismatch.
PhasedProduct multiply(const PauliProduct &a, const PauliProduct &b);

/// Operator product a*b. Throws std::domain_error if the phase is +-i, since
/// only Hermitian results are meaningful outside multiply().
PauliProduct operator*(const PauliProduct &a, const PauliProduct &b);

/// True iff the symplectic inner product of a and b is even.
bool commutes(const PauliProduct &a, const PauliProduct &b);

/// Qubits carrying a non-identity Pauli, ascending.
std::vector<size_t> support(const PauliProduct &p);

/// Signs indexed by generator in the order X_0, Z_0, X_1, Z_1, ...
class SignVector {
   public:
    SignVector() = default;
    explicit SignVector(size_t num_qubits) : signs_(2 * num_qubits, +1) {}

    static size_t x_index(size_t q) { return 2 * q; }
    static size_t z_index(size_t q) { return 2 * q + 1; }

    size_t num_qubits() const { return signs_.size() / 2; }
    size_t size() const { return signs_.size(); }
    int operator[](size_t g) const { return signs_[g]; }
    void set(size_t g, int sign);
    bool all_positive() const;
    std::string str() const;

    bool operator==(const SignVector &other) const = default;

   private:
    std::vector<int8_t> signs_;
};

/// Finds the Pauli product F that anticommutes with images[g] exactly when
/// required_flips[g] == -1, by Gaussian elimination over GF(2). The returned
/// product always carries a + sign.
///
/// images must contain 2n products on n qubits, ordered like SignVector.
/// Throws std::invalid_argument if the linear system is inconsistent, which
/// can only happen when the images are not a symplectic basis.
PauliProduct solve_frame(std::span<const PauliProduct> images, const SignVector &required_flips);

}  // namespace tmc

#endif
