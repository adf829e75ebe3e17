// Copyright 2026 The Autolab Authors
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

#include "autolab/pauli.hpp"

#include <stdexcept>

namespace autolab {

PauliString PauliString::single(size_t n, size_t qubit, char letter) {
    PauliString p(n);
    if (qubit >= n) {
        throw std::invalid_argument("PauliString::single: qubit out of range");
    }
    p.set_letter(qubit, letter);
    return p;
}

PauliString PauliString::from_string(const std::string& s) {
    size_t i = 0;
    int sign = +1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = (s[i] == '-') ? -1 : +1;
        i++;
    }
    PauliString p(s.size() - i);
    for (size_t q = 0; i < s.size(); i++, q++) {
        char c = s[i];
        if (c == '_') {
            c = 'I';
        }
        p.set_letter(q, c);
    }
    p.set_sign(sign);
    return p;
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    if (v) {
        x_[q >> 6] |= mask;
    } else {
        x_[q >> 6] &= ~mask;
    }
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    if (v) {
        z_[q >> 6] |= mask;
    } else {
        z_[q >> 6] &= ~mask;
    }
}

char PauliString::letter(size_t q) const {
    bool x = x_bit(q), z = z_bit(q);
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

void PauliString::set_letter(size_t q, char letter) {
    // Keeps the Y-canonical phase fixed: writing a 'Y' adjusts the internal
    // XZ phase by the i in Y = i XZ.
    int old_y = (x_bit(q) && z_bit(q)) ? 1 : 0;
    switch (letter) {
        case 'I': set_x(q, false); set_z(q, false); break;
        case 'X': set_x(q, true); set_z(q, false); break;
        case 'Y': set_x(q, true); set_z(q, true); break;
        case 'Z': set_x(q, false); set_z(q, true); break;
        default:
            throw std::invalid_argument("PauliString: bad letter");
    }
    int new_y = (letter == 'Y') ? 1 : 0;
    phase_xz_ = static_cast<uint8_t>((phase_xz_ + new_y - old_y + 4) & 3);
}

int PauliString::phase() const {
    return static_cast<int>((phase_xz_ + 4 - (y_count() & 3)) & 3);
}

bool PauliString::is_identity_bits() const {
    for (size_t i = 0; i < x_.size(); i++) {
        if (x_[i] | z_[i]) return false;
    }
    return true;
}

int PauliString::sign() const {
    int p = phase();
    if (p == 0) return +1;
    if (p == 2) return -1;
    throw std::logic_error("PauliString::sign on non-Hermitian string");
}

void PauliString::set_sign(int s) {
    if (s != 1 && s != -1) {
        throw std::invalid_argument("PauliString::set_sign: sign must be +-1");
    }
    phase_xz_ = static_cast<uint8_t>(((y_count() & 3) + (s == -1 ? 2 : 0)) & 3);
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t i = 0; i < x_.size(); i++) {
        w += __builtin_popcountll(x_[i] | z_[i]);
    }
    return w;
}

void PauliString::check_same_size(const PauliString& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("PauliString: qubit count mismatch");
    }
}

void PauliString::mul_inplace(const PauliString& rhs) {
    check_same_size(rhs);
    // (i^p1 X^x1 Z^z1)(i^p2 X^x2 Z^z2): moving Z^z1 past X^x2 costs
    // (-1)^{|z1 & x2|}.
    int extra = bitops::and_parity(z_.data(), rhs.x_.data(), x_.size()) ? 2 : 0;
    phase_xz_ = static_cast<uint8_t>((phase_xz_ + rhs.phase_xz_ + extra) & 3);
    bitops::xor_rows(x_.data(), rhs.x_.data(), x_.size());
    bitops::xor_rows(z_.data(), rhs.z_.data(), z_.size());
}

bool PauliString::commutes_with(const PauliString& other) const {
    check_same_size(other);
    return !bitops::symplectic_parity(x_.data(), z_.data(), other.x_.data(),
                                      other.z_.data(), x_.size());
}

std::string PauliString::str() const {
    std::string out;
    switch (phase()) {
        case 0: out = "+"; break;
        case 1: out = "+i"; break;
        case 2: out = "-"; break;
        case 3: out = "-i"; break;
    }
    for (size_t q = 0; q < n_; q++) {
        out += letter(q);
    }
    return out;
}

bool PauliString::bits_less_than(const PauliString& other) const {
    for (size_t q = 0; q < n_; q++) {
        if (x_bit(q) != other.x_bit(q)) return x_bit(q) < other.x_bit(q);
    }
    for (size_t q = 0; q < n_; q++) {
        if (z_bit(q) != other.z_bit(q)) return z_bit(q) < other.z_bit(q);
    }
    return false;
}

}  // namespace autolab
