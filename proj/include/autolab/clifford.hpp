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

#ifndef AUTOLAB_CLIFFORD_HPP
#define AUTOLAB_CLIFFORD_HPP

#include <vector>

#include "autolab/pauli.hpp"

namespace autolab {

// A Clifford unitary recorded by the images of the X_q / Z_q generators
// under conjugation. apply() pushes an arbitrary signed Pauli through.
struct CliffordMap {
    size_t n = 0;
    std::vector<PauliString> x_img;
    std::vector<PauliString> z_img;

    static CliffordMap identity(size_t n);

    // Embed a small map into a larger register: qubit t of the small map
    // acts on targets[t].
    CliffordMap embed(size_t total, const std::vector<size_t>& targets) const;

    PauliString apply(const PauliString& p) const;

    // Composition: (a.then(b)).apply(p) == b.apply(a.apply(p)).
    CliffordMap then(const CliffordMap& b) const;

    // Consistency check: images preserve commutation and Hermiticity.
    bool valid() const;
};

}  // namespace autolab

#endif
