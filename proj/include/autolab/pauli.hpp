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

#ifndef AUTOLAB_PAULI_HPP
#define AUTOLAB_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "autolab/bitops.hpp"

namespace autolab {

// Signed n-qubit Pauli in binary-symplectic form.
//
// Internally a string is stored as i^phase * prod_q X_q^{x_q} Z_q^{z_q}
// with phase tracked mod 4 (the "XZ convention"). The public phase() uses
// the Y-canonical convention, i.e. the power of i in front of a tensor
// product of I/X/Y/Z letters, so Hermitian strings have phase() in {0, 2}
// and sign() reads them as +1/-1.
class PauliString {
  public:
    PauliString() : n_(0), phase_xz_(0) {}
    explicit PauliString(size_t n)
        : n_(n), phase_xz_(0), x_(bitops::words_for_bits(n), 0),
          z_(bitops::words_for_bits(n), 0) {}

    static PauliString identity(size_t n) { return PauliString(n); }
    // Single-site letter, e.g. single(5, 2, 'Y').
    static PauliString single(size_t n, size_t qubit, char letter);
    // Parse "+XXI", "-IZZ", "XYZ" (implicit +). Throws on junk.
    static PauliString from_string(const std::string& s);

    size_t num_qubits() const { return n_; }
    size_t words() const { return x_.size(); }

    bool x_bit(size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);

    const uint64_t* x_words() const { return x_.data(); }
    const uint64_t* z_words() const { return z_.data(); }

    // 'I', 'X', 'Y' or 'Z' at qubit q.
    char letter(size_t q) const;
    void set_letter(size_t q, char letter);

    // Phase exponent mod 4 in the Y-canonical convention.
    int phase() const;
    // Raw internal XZ-convention phase (power of i).
    int phase_xz() const { return phase_xz_; }
    void set_phase_xz(int p) { phase_xz_ = static_cast<uint8_t>(p & 3); }

    bool is_identity_bits() const;
    bool is_hermitian() const { int p = phase(); return p == 0 || p == 2; }
    // +1 or -1; requires a Hermitian string.
    int sign() const;
    void set_sign(int s);
    // Multiply the overall phase by (-1).
    void negate() { phase_xz_ = static_cast<uint8_t>((phase_xz_ + 2) & 3); }

    size_t weight() const;
    size_t y_count() const { return bitops::and_popcount(x_.data(), z_.data(), x_.size()); }

    // this *= rhs (left-multiplied in operator order: result = (*this) rhs).
    void mul_inplace(const PauliString& rhs);
    friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
        lhs.mul_inplace(rhs);
        return lhs;
    }

    bool commutes_with(const PauliString& other) const;

    // Exact equality including phase.
    bool operator==(const PauliString& other) const {
        return n_ == other.n_ && phase_xz_ == other.phase_xz_ &&
               x_ == other.x_ && z_ == other.z_;
    }
    bool operator!=(const PauliString& other) const { return !(*this == other); }
    // Equality of the bit pattern, ignoring phase.
    bool same_bits(const PauliString& other) const {
        return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
    }

    // "+XXI" form. Hermitian strings only ('+'/'-' prefix); non-Hermitian
    // phases render as "+i"/"-i".
    std::string str() const;

    // Lexicographic bit order for canonical forms: x-block then z-block.
    bool bits_less_than(const PauliString& other) const;

  private:
    void check_same_size(const PauliString& other) const;

    size_t n_;
    uint8_t phase_xz_;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
};

}  // namespace autolab

#endif
