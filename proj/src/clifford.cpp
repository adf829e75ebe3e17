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

#include "autolab/clifford.hpp"

#include <stdexcept>

namespace autolab {

CliffordMap CliffordMap::identity(size_t n) {
    CliffordMap m;
    m.n = n;
    for (size_t q = 0; q < n; q++) {
        m.x_img.push_back(PauliString::single(n, q, 'X'));
        m.z_img.push_back(PauliString::single(n, q, 'Z'));
    }
    return m;
}

CliffordMap CliffordMap::embed(size_t total,
                               const std::vector<size_t>& targets) const {
    if (targets.size() != n) {
        throw std::invalid_argument("CliffordMap::embed: target count mismatch");
    }
    CliffordMap out = CliffordMap::identity(total);
    auto lift = [&](const PauliString& small) {
        PauliString big = PauliString::identity(total);
        big.set_phase_xz(small.phase_xz());
        for (size_t q = 0; q < n; q++) {
            big.set_x(targets[q], small.x_bit(q));
            big.set_z(targets[q], small.z_bit(q));
        }
        return big;
    };
    for (size_t q = 0; q < n; q++) {
        out.x_img[targets[q]] = lift(x_img[q]);
        out.z_img[targets[q]] = lift(z_img[q]);
    }
    return out;
}

PauliString CliffordMap::apply(const PauliString& p) const {
    if (p.num_qubits() != n) {
        throw std::invalid_argument("CliffordMap::apply: size mismatch");
    }
    // p = i^ph * prod_q X_q^{x} Z_q^{z} in ascending-q, X-before-Z order;
    // conjugation maps each factor to its image, in the same order.
    PauliString out = PauliString::identity(n);
    out.set_phase_xz(p.phase_xz());
    for (size_t q = 0; q < n; q++) {
        if (p.x_bit(q)) out.mul_inplace(x_img[q]);
        if (p.z_bit(q)) out.mul_inplace(z_img[q]);
    }
    return out;
}

CliffordMap CliffordMap::then(const CliffordMap& b) const {
    if (b.n != n) {
        throw std::invalid_argument("CliffordMap::then: size mismatch");
    }
    CliffordMap out;
    out.n = n;
    for (size_t q = 0; q < n; q++) {
        out.x_img.push_back(b.apply(x_img[q]));
        out.z_img.push_back(b.apply(z_img[q]));
    }
    return out;
}

bool CliffordMap::valid() const {
    for (size_t q = 0; q < n; q++) {
        if (!x_img[q].is_hermitian() || !z_img[q].is_hermitian()) return false;
        if (x_img[q].commutes_with(z_img[q])) return false;
        for (size_t r = q + 1; r < n; r++) {
            if (!x_img[q].commutes_with(x_img[r])) return false;
            if (!x_img[q].commutes_with(z_img[r])) return false;
            if (!z_img[q].commutes_with(x_img[r])) return false;
            if (!z_img[q].commutes_with(z_img[r])) return false;
        }
    }
    return true;
}

}  // namespace autolab
