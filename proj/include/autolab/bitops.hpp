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

#ifndef AUTOLAB_BITOPS_HPP
#define AUTOLAB_BITOPS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace autolab::bitops {

// Word-packed GF(2) row kernels used by the Pauli/tableau layer.
//
// Every kernel has a scalar reference implementation and, where the host
// supports it, a SIMD variant (AVX2 on x86-64, NEON on aarch64) selected
// once at startup. The selected backend can be overridden for testing.

enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
const char* backend_name(Backend b);

// Force a backend. Throws std::runtime_error if unsupported on this host.
void set_backend(Backend b);

// Backend available on this host?
bool backend_supported(Backend b);

inline size_t words_for_bits(size_t nbits) { return (nbits + 63) / 64; }

// dst ^= src, word-wise.
void xor_rows(uint64_t* dst, const uint64_t* src, size_t words);

// Parity (mod 2) of popcount(a & b).
bool and_parity(const uint64_t* a, const uint64_t* b, size_t words);

// Total popcount of a.
uint64_t popcount(const uint64_t* a, size_t words);

// Total popcount of a & b.
uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t words);

// Symplectic inner product parity: parity(x1&z2) ^ parity(z1&x2).
bool symplectic_parity(const uint64_t* x1, const uint64_t* z1,
                       const uint64_t* x2, const uint64_t* z2, size_t words);

// Scalar reference implementations, always available (used by the
// backend-equivalence tests).
namespace scalar {
void xor_rows(uint64_t* dst, const uint64_t* src, size_t words);
bool and_parity(const uint64_t* a, const uint64_t* b, size_t words);
uint64_t popcount(const uint64_t* a, size_t words);
uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t words);
bool symplectic_parity(const uint64_t* x1, const uint64_t* z1,
                       const uint64_t* x2, const uint64_t* z2, size_t words);
}  // namespace scalar

}  // namespace autolab::bitops

#endif
