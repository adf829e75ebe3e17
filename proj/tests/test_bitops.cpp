#include <doctest.h>

#include <vector>

#include "autolab/bitops.hpp"
#include "autolab/rng.hpp"

using namespace autolab;

namespace {

std::vector<uint64_t> random_words(Rng& rng, size_t n) {
    std::vector<uint64_t> out(n);
    for (auto& w : out) w = rng.next_u64();
    return out;
}

}  // namespace

TEST_CASE("simd backends agree with the scalar reference") {
    Rng rng(0x5eed);
    std::vector<bitops::Backend> candidates = {bitops::Backend::Avx2,
                                               bitops::Backend::Neon};
    bitops::Backend original = bitops::active_backend();
    for (auto be : candidates) {
        if (!bitops::backend_supported(be)) continue;
        bitops::set_backend(be);
        for (size_t words : {1u, 3u, 4u, 7u, 16u, 33u}) {
            auto a = random_words(rng, words);
            auto b = random_words(rng, words);
            auto x1 = random_words(rng, words);
            auto z1 = random_words(rng, words);

            CHECK(bitops::and_parity(a.data(), b.data(), words) ==
                  bitops::scalar::and_parity(a.data(), b.data(), words));
            CHECK(bitops::popcount(a.data(), words) ==
                  bitops::scalar::popcount(a.data(), words));
            CHECK(bitops::and_popcount(a.data(), b.data(), words) ==
                  bitops::scalar::and_popcount(a.data(), b.data(), words));
            CHECK(bitops::symplectic_parity(x1.data(), z1.data(), a.data(),
                                            b.data(), words) ==
                  bitops::scalar::symplectic_parity(x1.data(), z1.data(),
                                                    a.data(), b.data(), words));

            auto d1 = a, d2 = a;
            bitops::xor_rows(d1.data(), b.data(), words);
            bitops::scalar::xor_rows(d2.data(), b.data(), words);
            CHECK(d1 == d2);
        }
    }
    bitops::set_backend(original);
}

TEST_CASE("popcount parity matches direct counting") {
    std::vector<uint64_t> a = {0xffffffffffffffffULL, 1, 0};
    std::vector<uint64_t> b = {0x1, 1, 0xf0};
    CHECK(bitops::and_popcount(a.data(), b.data(), 3) == 2);
    CHECK(bitops::and_parity(a.data(), b.data(), 3) == false);
    CHECK(bitops::popcount(a.data(), 3) == 65);
}
