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

// AVX2 variants of the GF(2) row kernels. This translation unit is the only
// one compiled with -mavx2; callers go through the runtime dispatch table.

#include <cstddef>
#include <cstdint>

#if defined(AUTOLAB_HAVE_AVX2_TU)

#include <immintrin.h>

namespace autolab::bitops::avx2 {

namespace {

// Per-byte popcount via the nibble lookup trick, summed with psadbw.
inline __m256i popcount_epu8(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                  _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline uint64_t hsum_epi64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<uint64_t>(_mm_extract_epi64(s, 1));
}

inline uint64_t hxor_epi64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_xor_si128(lo, hi);
    return static_cast<uint64_t>(_mm_extract_epi64(s, 0)) ^
           static_cast<uint64_t>(_mm_extract_epi64(s, 1));
}

}  // namespace

void xor_rows(uint64_t* dst, const uint64_t* src, size_t words) {
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_xor_si256(d, s));
    }
    for (; i < words; i++) {
        dst[i] ^= src[i];
    }
}

bool and_parity(const uint64_t* a, const uint64_t* b, size_t words) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(va, vb));
    }
    uint64_t fold = hxor_epi64(acc);
    for (; i < words; i++) {
        fold ^= a[i] & b[i];
    }
    return __builtin_parityll(fold);
}

uint64_t popcount(const uint64_t* a, size_t words) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount_epu8(v));
    }
    uint64_t total = hsum_epi64(acc);
    for (; i < words; i++) {
        total += __builtin_popcountll(a[i]);
    }
    return total;
}

uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t words) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount_epu8(_mm256_and_si256(va, vb)));
    }
    uint64_t total = hsum_epi64(acc);
    for (; i < words; i++) {
        total += __builtin_popcountll(a[i] & b[i]);
    }
    return total;
}

bool symplectic_parity(const uint64_t* x1, const uint64_t* z1,
                       const uint64_t* x2, const uint64_t* z2, size_t words) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i vx1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x1 + i));
        __m256i vz1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(z1 + i));
        __m256i vx2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x2 + i));
        __m256i vz2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(z2 + i));
        __m256i t = _mm256_xor_si256(_mm256_and_si256(vx1, vz2),
                                     _mm256_and_si256(vz1, vx2));
        acc = _mm256_xor_si256(acc, t);
    }
    uint64_t fold = hxor_epi64(acc);
    for (; i < words; i++) {
        fold ^= (x1[i] & z2[i]) ^ (z1[i] & x2[i]);
    }
    return __builtin_parityll(fold);
}

}  // namespace autolab::bitops::avx2

#endif  // AUTOLAB_HAVE_AVX2_TU
