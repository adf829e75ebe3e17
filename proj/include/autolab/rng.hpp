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

#ifndef AUTOLAB_RNG_HPP
#define AUTOLAB_RNG_HPP

#include <cstdint>

namespace autolab {

// SplitMix64. One 64-bit master seed reproduces every run; substreams are
// derived by hashing stream labels into the seed, so work can be reordered
// or parallelized without changing any outcome.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    bool next_bit() { return next_u64() >> 63; }

    double next_double() {  // uniform in [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Derive an independent substream from labels.
    static uint64_t mix(uint64_t seed, uint64_t a, uint64_t b = 0,
                        uint64_t c = 0) {
        Rng r(seed ^ (a * 0x9e3779b97f4a7c15ULL) ^
              (b * 0xc2b2ae3d27d4eb4fULL) ^ (c * 0x165667b19e3779f9ULL));
        return r.next_u64();
    }

    Rng split(uint64_t a, uint64_t b = 0, uint64_t c = 0) const {
        return Rng(mix(state_, a, b, c));
    }

  private:
    uint64_t state_;
};

}  // namespace autolab

#endif
