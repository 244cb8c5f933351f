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

#include "tmc/pauli.h"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace tmc {

namespace {

size_t num_words(size_t num_qubits) { return (num_qubits + 63) / 64; }

void require_same_size(const PauliProduct &a, const PauliProduct &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "Pauli product size mismatch: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

// Exponent of i picked up when multiplying single-qubit Paulis p1 * p2.
int single_qubit_log_i(bool x1, bool z1, bool x2, bool z2) {
    if (x1 && z1) {
        return int(z2) - int(x2);
    }
    if (x1) {
        return z2 ? (x2 ? 1 : -1) : 0;
    }
    if (z1) {
        return x2 ? (z2 ? -1 : 1) : 0;
    }
    return 0;
}

}  // namespace

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

bool anticommute(Pauli a, Pauli b) { return a != Pauli::I && b != Pauli::I && a != b; }

PauliProduct::PauliProduct(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(num_words(num_qubits), 0), zs_(num_words(num_qubits), 0) {}

PauliProduct PauliProduct::single(size_t num_qubits, size_t qubit, Pauli p) {
    PauliProduct result(num_qubits);
    result.set(qubit, p);
    return result;
}

PauliProduct PauliProduct::from_text(std::string_view text, size_t num_qubits) {
    PauliProduct result(num_qubits);
    size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        result.negative_ = text[k] == '-';
        k++;
    }
    std::string_view body = text.substr(k);
    if (body == "I") {
        return result;
    }
    if (body.empty()) {
        throw std::invalid_argument("empty Pauli product text");
    }
    std::vector<bool> seen(num_qubits, false);
    size_t pos = 0;
    while (true) {
        char letter = body[pos];
        if (letter != 'X' && letter != 'Y' && letter != 'Z') {
            throw std::invalid_argument("bad Pauli product text: '" + std::string(text) + "'");
        }
        pos++;
        size_t q = 0;
        auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), q);
        if (ec != std::errc() || ptr == body.data() + pos) {
            throw std::invalid_argument("missing qubit index in '" + std::string(text) + "'");
        }
        pos = ptr - body.data();
        if (q >= num_qubits) {
            throw std::invalid_argument("qubit index out of range in '" + std::string(text) + "'");
        }
        if (seen[q]) {
            throw std::invalid_argument("repeated qubit index in '" + std::string(text) + "'");
        }
        seen[q] = true;
        result.set(q, pauli_from_char(letter));
        if (pos == body.size()) {
            break;
        }
        if (body[pos] != '*' || pos + 1 == body.size()) {
            throw std::invalid_argument("bad Pauli product text: '" + std::string(text) + "'");
        }
        pos++;
    }
    return result;
}

Pauli PauliProduct::get(size_t q) const { return pauli_from_bits(x(q), z(q)); }

void PauliProduct::set(size_t q, Pauli p) {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    uint64_t bit = uint64_t{1} << (q & 63);
    xs_[q >> 6] = has_x(p) ? (xs_[q >> 6] | bit) : (xs_[q >> 6] & ~bit);
    zs_[q >> 6] = has_z(p) ? (zs_[q >> 6] | bit) : (zs_[q >> 6] & ~bit);
}

bool PauliProduct::x(size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
bool PauliProduct::z(size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }

bool PauliProduct::is_identity() const {
    for (size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

size_t PauliProduct::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

bool PauliProduct::equal_up_to_sign(const PauliProduct &other) const {
    return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
}

bool PauliProduct::operator==(const PauliProduct &other) const {
    return negative_ == other.negative_ && equal_up_to_sign(other);
}

std::string PauliProduct::letters() const {
    std::string out;
    for (size_t q = 0; q < num_qubits_; q++) {
        Pauli p = get(q);
        if (p == Pauli::I) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += pauli_char(p);
        out += std::to_string(q);
    }
    return out.empty() ? "I" : out;
}

std::string PauliProduct::str() const { return (negative_ ? "-" : "+") + letters(); }

uint8_t inplace_right_mul_log_i(PauliProduct &lhs, const PauliProduct &rhs) {
    require_same_size(lhs, rhs);
    int log_i = 2 * (int(lhs.negative_) + int(rhs.negative_));
    for (size_t w = 0; w < lhs.xs_.size(); w++) {
        uint64_t x1 = lhs.xs_[w], z1 = lhs.zs_[w];
        uint64_t x2 = rhs.xs_[w], z2 = rhs.zs_[w];
        // Only qubits where both factors are non-identity contribute a phase.
        uint64_t active = (x1 | z1) & (x2 | z2);
        while (active) {
            int b = std::countr_zero(active);
            active &= active - 1;
            log_i += single_qubit_log_i((x1 >> b) & 1, (z1 >> b) & 1, (x2 >> b) & 1, (z2 >> b) & 1);
        }
        lhs.xs_[w] = x1 ^ x2;
        lhs.zs_[w] = z1 ^ z2;
    }
    lhs.negative_ = false;
    return static_cast<uint8_t>(((log_i % 4) + 4) % 4);
}

PhasedProduct multiply(const PauliProduct &a, const PauliProduct &b) {
    PhasedProduct result{a, false};
    uint8_t log_i = inplace_right_mul_log_i(result.pauli, b);
    result.imaginary = (log_i & 1) != 0;
    result.pauli.set_negative((log_i & 2) != 0);
    return result;
}

PauliProduct operator*(const PauliProduct &a, const PauliProduct &b) {
    PhasedProduct result = multiply(a, b);
    if (result.imaginary) {
        throw std::domain_error("product of anticommuting Pauli products has an imaginary phase");
    }
    return result.pauli;
}

bool commutes(const PauliProduct &a, const PauliProduct &b) {
    require_same_size(a, b);
    auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
    uint64_t parity = 0;
    for (size_t w = 0; w < ax.size(); w++) {
        parity ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
    }
    return (std::popcount(parity) & 1) == 0;
}

std::vector<size_t> support(const PauliProduct &p) {
    std::vector<size_t> result;
    auto xs = p.x_words(), zs = p.z_words();
    for (size_t w = 0; w < xs.size(); w++) {
        uint64_t bits = xs[w] | zs[w];
        while (bits) {
            result.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return result;
}

void SignVector::set(size_t g, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("sign must be +1 or -1");
    }
    signs_.at(g) = static_cast<int8_t>(sign);
}

bool SignVector::all_positive() const {
    for (int8_t s : signs_) {
        if (s < 0) {
            return false;
        }
    }
    return true;
}

std::string SignVector::str() const {
    std::string out;
    for (int8_t s : signs_) {
        out += s < 0 ? '-' : '+';
    }
    return out;
}

PauliProduct solve_frame(std::span<const PauliProduct> images, const SignVector &required_flips) {
    if (images.size() != required_flips.size()) {
        throw std::invalid_argument("solve_frame: image count does not match sign vector length");
    }
    size_t n = required_flips.num_qubits();
    for (const auto &img : images) {
        if (img.num_qubits() != n) {
            throw std::invalid_argument("solve_frame: image has the wrong qubit count");
        }
    }

    // Unknowns are (fx_0..fx_{n-1}, fz_0..fz_{n-1}); column 2n holds the right hand side.
    // The row for image P reads sum_q fx_q * P.z_q + fz_q * P.x_q = [flip].
    size_t cols = 2 * n + 1;
    size_t words = (cols + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(images.size(), std::vector<uint64_t>(words, 0));
    auto set_bit = [](std::vector<uint64_t> &row, size_t c) { row[c >> 6] |= uint64_t{1} << (c & 63); };
    auto get_bit = [](const std::vector<uint64_t> &row, size_t c) { return (row[c >> 6] >> (c & 63)) & 1; };
    for (size_t g = 0; g < images.size(); g++) {
        for (size_t q = 0; q < n; q++) {
            if (images[g].z(q)) {
                set_bit(rows[g], q);
            }
            if (images[g].x(q)) {
                set_bit(rows[g], n + q);
            }
        }
        if (required_flips[g] < 0) {
            set_bit(rows[g], 2 * n);
        }
    }

    std::vector<size_t> pivot_col_of_row;
    size_t rank = 0;
    for (size_t c = 0; c < 2 * n && rank < rows.size(); c++) {
        size_t pivot = rank;
        while (pivot < rows.size() && !get_bit(rows[pivot], c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && get_bit(rows[r], c)) {
                for (size_t w = 0; w < words; w++) {
                    rows[r][w] ^= rows[rank][w];
                }
            }
        }
        pivot_col_of_row.push_back(c);
        rank++;
    }
    for (size_t r = rank; r < rows.size(); r++) {
        if (get_bit(rows[r], 2 * n)) {
            throw std::invalid_argument("solve_frame: inconsistent system; images are not a valid tableau");
        }
    }

    PauliProduct frame(n);
    for (size_t r = 0; r < rank; r++) {
        if (!get_bit(rows[r], 2 * n)) {
            continue;
        }
        size_t c = pivot_col_of_row[r];
        size_t q = c < n ? c : c - n;
        Pauli cur = frame.get(q);
        frame.set(q, pauli_xor(cur, c < n ? Pauli::X : Pauli::Z));
    }
    return frame;
}

}  // namespace tmc
