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

#include "autolab/tableau.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace autolab {

StabilizerTableau::StabilizerTableau(size_t n, uint64_t rng_seed)
    : n_(n), rng_(rng_seed) {
    free_.reserve(2 * n);
    for (size_t q = 0; q < n; q++) {
        free_.push_back(PauliString::single(n, q, 'X'));
        free_.push_back(PauliString::single(n, q, 'Z'));
    }
}

StabilizerTableau StabilizerTableau::zero_state(size_t n, uint64_t rng_seed) {
    StabilizerTableau t(n, rng_seed);
    t.free_.clear();
    for (size_t q = 0; q < n; q++) {
        t.stab_.push_back(PauliString::single(n, q, 'Z'));
        t.destab_.push_back(PauliString::single(n, q, 'X'));
    }
    return t;
}

void StabilizerTableau::apply_cz(size_t a, size_t b) {
    if (a >= n_ || b >= n_ || a == b) {
        throw std::invalid_argument("apply_cz: bad qubit index");
    }
    auto conj = [&](PauliString& p) {
        bool xa = p.x_bit(a), xb = p.x_bit(b);
        // X_a -> X_a Z_b, X_b -> X_b Z_a, phase picks up (-1)^{xa xb}.
        if (xa) p.set_z(b, !p.z_bit(b));
        if (xb) p.set_z(a, !p.z_bit(a));
        if (xa && xb) p.set_phase_xz(p.phase_xz() + 2);
    };
    for (auto& p : stab_) conj(p);
    for (auto& p : destab_) conj(p);
    for (auto& p : free_) conj(p);
}

void StabilizerTableau::apply_h(size_t q) {
    if (q >= n_) {
        throw std::invalid_argument("apply_h: bad qubit index");
    }
    auto conj = [&](PauliString& p) {
        bool x = p.x_bit(q), z = p.z_bit(q);
        // X <-> Z; Y -> -Y. In the XZ convention XZ -> ZX = -XZ.
        p.set_x(q, z);
        p.set_z(q, x);
        if (x && z) p.set_phase_xz(p.phase_xz() + 2);
    };
    for (auto& p : stab_) conj(p);
    for (auto& p : destab_) conj(p);
    for (auto& p : free_) conj(p);
}

int StabilizerTableau::resolve_deterministic(const PauliString& p) const {
    // p commutes with every stabilizer and free row, so its bit pattern is a
    // product of stabilizer bit patterns. The subset is read off from the
    // destabilizer pairings.
    PauliString acc = PauliString::identity(n_);
    for (size_t i = 0; i < stab_.size(); i++) {
        if (!destab_[i].commutes_with(p)) {
            acc.mul_inplace(stab_[i]);
        }
    }
    if (!acc.same_bits(p)) {
        throw std::logic_error("tableau invariant violated in membership test");
    }
    return (acc.phase_xz() == p.phase_xz()) ? +1 : -1;
}

MeasureResult StabilizerTableau::measure_random_case(const PauliString& p,
                                                     MeasurePolicy policy,
                                                     RowKind pivot_kind,
                                                     size_t pivot_index) {
    PauliString pivot =
        (pivot_kind == RowKind::Stab) ? stab_[pivot_index] : free_[pivot_index];
    auto fix = [&](PauliString& row) {
        if (!row.commutes_with(p)) {
            row.mul_inplace(pivot);
        }
    };
    for (size_t i = 0; i < stab_.size(); i++) {
        if (pivot_kind == RowKind::Stab && i == pivot_index) continue;
        fix(stab_[i]);
        fix(destab_[i]);
    }
    if (pivot_kind == RowKind::Stab) {
        // Destabilizer partner is replaced wholesale, no need to fix it.
        for (auto& row : free_) fix(row);
    } else {
        size_t partner = pivot_index ^ 1;
        for (size_t i = 0; i < free_.size(); i++) {
            if (i == pivot_index || i == partner) continue;
            fix(free_[i]);
        }
    }

    int outcome = +1;
    if (policy == MeasurePolicy::Random) {
        outcome = rng_.next_bit() ? -1 : +1;
    }
    // The post-measurement stabilizer is outcome * p, keeping p's own sign.
    PauliString new_stab = p;
    if (outcome == -1) new_stab.negate();

    if (pivot_kind == RowKind::Stab) {
        destab_[pivot_index] = pivot;
        stab_[pivot_index] = new_stab;
    } else {
        stab_.push_back(new_stab);
        destab_.push_back(pivot);
        size_t partner = pivot_index ^ 1;
        size_t hi = std::max(pivot_index, partner);
        size_t lo = std::min(pivot_index, partner);
        free_.erase(free_.begin() + hi);
        free_.erase(free_.begin() + lo);
    }
    return {outcome, false};
}

MeasureResult StabilizerTableau::measure(const PauliString& p,
                                         MeasurePolicy policy) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("measure: qubit count mismatch");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("measure: operator is not Hermitian");
    }
    if (p.is_identity_bits()) {
        return {p.sign(), true};
    }
    for (size_t i = 0; i < stab_.size(); i++) {
        if (!stab_[i].commutes_with(p)) {
            return measure_random_case(p, policy, RowKind::Stab, i);
        }
    }
    for (size_t i = 0; i < free_.size(); i++) {
        if (!free_[i].commutes_with(p)) {
            return measure_random_case(p, policy, RowKind::Free, i);
        }
    }
    return {resolve_deterministic(p), true};
}

MeasureResult StabilizerTableau::measure_forced(const PauliString& p, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("measure_forced: outcome must be +-1");
    }
    auto det = deterministic_outcome(p);
    if (det.has_value()) {
        if (*det != outcome) {
            throw std::runtime_error(
                "measure_forced: requested outcome contradicts the state");
        }
        return measure(p, MeasurePolicy::ForcePlus);
    }
    MeasureResult res = measure(p, MeasurePolicy::ForcePlus);
    if (res.outcome != outcome) {
        // The row just installed for p carries +1; flip it.
        for (auto& s : stab_) {
            if (s.same_bits(p)) {
                s.negate();
                break;
            }
        }
        res.outcome = outcome;
    }
    return res;
}

std::optional<int> StabilizerTableau::deterministic_outcome(
    const PauliString& p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("deterministic_outcome: size mismatch");
    }
    if (p.is_identity_bits()) {
        return p.sign();
    }
    for (const auto& s : stab_) {
        if (!s.commutes_with(p)) return std::nullopt;
    }
    for (const auto& f : free_) {
        if (!f.commutes_with(p)) return std::nullopt;
    }
    return resolve_deterministic(p);
}

std::vector<PauliString> StabilizerTableau::canonical_form(
    std::vector<PauliString> gens) {
    if (gens.empty()) return gens;
    size_t n = gens[0].num_qubits();
    size_t rows = gens.size();
    size_t pivot_row = 0;
    auto bit_at = [&](const PauliString& p, size_t col) {
        return col < n ? p.x_bit(col) : p.z_bit(col - n);
    };
    for (size_t col = 0; col < 2 * n && pivot_row < rows; col++) {
        size_t found = rows;
        for (size_t r = pivot_row; r < rows; r++) {
            if (bit_at(gens[r], col)) {
                found = r;
                break;
            }
        }
        if (found == rows) continue;
        std::swap(gens[pivot_row], gens[found]);
        for (size_t r = 0; r < rows; r++) {
            if (r != pivot_row && bit_at(gens[r], col)) {
                gens[r].mul_inplace(gens[pivot_row]);
            }
        }
        pivot_row++;
    }
    for (size_t r = pivot_row; r < rows; r++) {
        if (!gens[r].is_identity_bits() || gens[r].phase_xz() != 0) {
            if (gens[r].is_identity_bits()) {
                throw std::invalid_argument(
                    "canonical_form: generators produce -I (inconsistent group)");
            }
            throw std::logic_error("canonical_form: elimination failed");
        }
    }
    gens.resize(pivot_row);
    return gens;
}

size_t StabilizerTableau::gf2_rank(const std::vector<PauliString>& gens) {
    // Pure bit-space rank; signs don't matter here.
    std::vector<PauliString> rows = gens;
    if (rows.empty()) return 0;
    size_t n = rows[0].num_qubits();
    auto bit_at = [&](const PauliString& p, size_t col) {
        return col < n ? p.x_bit(col) : p.z_bit(col - n);
    };
    size_t pivot_row = 0;
    for (size_t col = 0; col < 2 * n && pivot_row < rows.size(); col++) {
        size_t found = rows.size();
        for (size_t r = pivot_row; r < rows.size(); r++) {
            if (bit_at(rows[r], col)) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != pivot_row && bit_at(rows[r], col)) {
                rows[r].mul_inplace(rows[pivot_row]);
            }
        }
        pivot_row++;
    }
    return pivot_row;
}

std::vector<PauliString> StabilizerTableau::canonical_stabilizers() const {
    return canonical_form(stab_);
}

bool StabilizerTableau::groups_equal(const StabilizerTableau& other) const {
    return groups_equal(stab_, other.stab_);
}

bool StabilizerTableau::groups_equal(const std::vector<PauliString>& a,
                                     const std::vector<PauliString>& b) {
    if (!a.empty() && !b.empty() &&
        a[0].num_qubits() != b[0].num_qubits()) {
        throw std::invalid_argument("groups_equal: qubit count mismatch");
    }
    auto ca = canonical_form(a);
    auto cb = canonical_form(b);
    if (ca.size() != cb.size()) return false;
    for (size_t i = 0; i < ca.size(); i++) {
        if (ca[i] != cb[i]) return false;
    }
    return true;
}

void StabilizerTableau::serialize(std::ostream& out) const {
    for (const auto& s : stab_) {
        out << s.str() << "\n";
    }
}

}  // namespace autolab
