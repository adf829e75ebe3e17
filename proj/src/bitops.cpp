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

#include "autolab/bitops.hpp"

#include <stdexcept>

namespace autolab::bitops {

namespace scalar {

void xor_rows(uint64_t* dst, const uint64_t* src, size_t words) {
    for (size_t i = 0; i < words; i++) {
        dst[i] ^= src[i];
    }
}

bool and_parity(const uint64_t* a, const uint64_t* b, size_t words) {
    // Popcount parity is additive mod 2, so an xor-fold of the AND words
    // preserves it.
    uint64_t acc = 0;
    for (size_t i = 0; i < words; i++) {
        acc ^= a[i] & b[i];
    }
    return __builtin_parityll(acc);
}

uint64_t popcount(const uint64_t* a, size_t words) {
    uint64_t total = 0;
    for (size_t i = 0; i < words; i++) {
        total += __builtin_popcountll(a[i]);
    }
    return total;
}

uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t words) {
    uint64_t total = 0;
    for (size_t i = 0; i < words; i++) {
        total += __builtin_popcountll(a[i] & b[i]);
    }
    return total;
}

bool symplectic_parity(const uint64_t* x1, const uint64_t* z1,
                       const uint64_t* x2, const uint64_t* z2, size_t words) {
    uint64_t acc = 0;
    for (size_t i = 0; i < words; i++) {
        acc ^= (x1[i] & z2[i]) ^ (z1[i] & x2[i]);
    }
    return __builtin_parityll(acc);
}

}  // namespace scalar

#if defined(AUTOLAB_HAVE_AVX2_TU)
namespace avx2 {
void xor_rows(uint64_t* dst, const uint64_t* src, size_t words);
bool and_parity(const uint64_t* a, const uint64_t* b, size_t words);
uint64_t popcount(const uint64_t* a, size_t words);
uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t words);
bool symplectic_parity(const uint64_t* x1, const uint64_t* z1,
                       const uint64_t* x2, const uint64_t* z2, size_t words);
}  // namespace avx2
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
namespace neon {
void xor_rows(uint64_t* dst, const uint64_t* src, size_t words);
bool and_parity(const uint64_t* a, const uint64_t* b, size_t words);
uint64_t popcount(const uint64_t* a, size_t words);
uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t words);
bool symplectic_parity(const uint64_t* x1, const uint64_t* z1,
                       const uint64_t* x2, const uint64_t* z2, size_t words);
}  // namespace neon
#endif

namespace {

struct Vtable {
    void (*xor_rows)(uint64_t*, const uint64_t*, size_t);
    bool (*and_parity)(const uint64_t*, const uint64_t*, size_t);
    uint64_t (*popcount)(const uint64_t*, size_t);
    uint64_t (*and_popcount)(const uint64_t*, const uint64_t*, size_t);
    bool (*symplectic_parity)(const uint64_t*, const uint64_t*,
                              const uint64_t*, const uint64_t*, size_t);
};

constexpr Vtable kScalar{scalar::xor_rows, scalar::and_parity, scalar::popcount,
                         scalar::and_popcount, scalar::symplectic_parity};

#if defined(AUTOLAB_HAVE_AVX2_TU)
constexpr Vtable kAvx2{avx2::xor_rows, avx2::and_parity, avx2::popcount,
                       avx2::and_popcount, avx2::symplectic_parity};
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
constexpr Vtable kNeon{neon::xor_rows, neon::and_parity, neon::popcount,
                       neon::and_popcount, neon::symplectic_parity};
#endif

bool host_has(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(AUTOLAB_HAVE_AVX2_TU)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend pick_default() {
    if (host_has(Backend::Avx2)) {
        return Backend::Avx2;
    }
    if (host_has(Backend::Neon)) {
        return Backend::Neon;
    }
    return Backend::Scalar;
}

const Vtable* table_for(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return &kScalar;
        case Backend::Avx2:
#if defined(AUTOLAB_HAVE_AVX2_TU)
            return &kAvx2;
#else
            break;
#endif
        case Backend::Neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
            return &kNeon;
#else
            break;
#endif
    }
    return &kScalar;
}

Backend g_backend = pick_default();
const Vtable* g_table = table_for(g_backend);

}  // namespace

Backend active_backend() { return g_backend; }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

bool backend_supported(Backend b) { return host_has(b); }

void set_backend(Backend b) {
    if (!host_has(b)) {
        throw std::runtime_error(std::string("bitops backend unavailable: ") +
                                 backend_name(b));
    }
    g_backend = b;
    g_table = table_for(b);
}

void xor_rows(uint64_t* dst, const uint64_t* src, size_t words) {
    g_table->xor_rows(dst, src, words);
}

bool and_parity(const uint64_t* a, const uint64_t* b, size_t words) {
    return g_table->and_parity(a, b, words);
}

uint64_t popcount(const uint64_t* a, size_t words) {
    return g_table->popcount(a, words);
}

uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t words) {
    return g_table->and_popcount(a, b, words);
}

bool symplectic_parity(const uint64_t* x1, const uint64_t* z1,
                       const uint64_t* x2, const uint64_t* z2, size_t words) {
    return g_table->symplectic_parity(x1, z1, x2, z2, words);
}

}  // namespace autolab::bitops
