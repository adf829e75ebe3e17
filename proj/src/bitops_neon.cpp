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

// NEON variants of the GF(2) row kernels (aarch64).

#include <cstddef>
#include <cstdint>

#if defined(__ARM_NEON) || defined(__aarch64__)

#include <arm_neon.h>

namespace autolab::bitops::neon {

void xor_rows(uint64_t* dst, const uint64_t* src, size_t words) {
    size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < words; i++) {
        dst[i] ^= src[i];
    }
}

bool and_parity(const uint64_t* a, const uint64_t* b, size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    uint64_t fold = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < words; i++) {
        fold ^= a[i] & b[i];
    }
    return __builtin_parityll(fold);
}

uint64_t popcount(const uint64_t* a, size_t words) {
    uint64_t total = 0;
    size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(a + i));
        uint64x2_t c = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v))));
        total += vgetq_lane_u64(c, 0) + vgetq_lane_u64(c, 1);
    }
    for (; i < words; i++) {
        total += __builtin_popcountll(a[i]);
    }
    return total;
}

uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t words) {
    uint64_t total = 0;
    size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t w = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        uint8x16_t v = vreinterpretq_u8_u64(w);
        uint64x2_t c = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v))));
        total += vgetq_lane_u64(c, 0) + vgetq_lane_u64(c, 1);
    }
    for (; i < words; i++) {
        total += __builtin_popcountll(a[i] & b[i]);
    }
    return total;
}

bool symplectic_parity(const uint64_t* x1, const uint64_t* z1,
                       const uint64_t* x2, const uint64_t* z2, size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t t = veorq_u64(vandq_u64(vld1q_u64(x1 + i), vld1q_u64(z2 + i)),
                                 vandq_u64(vld1q_u64(z1 + i), vld1q_u64(x2 + i)));
        acc = veorq_u64(acc, t);
    }
    uint64_t fold = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < words; i++) {
        fold ^= (x1[i] & z2[i]) ^ (z1[i] & x2[i]);
    }
    return __builtin_parityll(fold);
}

}  // namespace autolab::bitops::neon

#endif  // __ARM_NEON || __aarch64__
