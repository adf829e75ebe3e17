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

#ifndef AUTOLAB_TABLEAU_HPP
#define AUTOLAB_TABLEAU_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "autolab/pauli.hpp"
#include "autolab/rng.hpp"

namespace autolab {

enum class MeasurePolicy {
    Random,     // coin from the tableau's rng
    ForcePlus,  // post-select +1 on otherwise-random outcomes
};

struct MeasureResult {
    int outcome;         // +1 or -1
    bool deterministic;  // value was fixed by the current stabilizer group
};

// Stabilizer tableau for mixed stabilizer states.
//
// Rows form a full symplectic basis: k stabilizer/destabilizer pairs plus
// (n - k) "free" conjugate pairs standing in for maximally mixed directions.
// Measuring a Pauli that anticommutes only with free rows promotes it to a
// new stabilizer, so the rank grows exactly the way repeated rounds of
// check measurements grow an instantaneous stabilizer group.
class StabilizerTableau {
  public:
    // Maximally mixed state on n qubits (no stabilizers).
    explicit StabilizerTableau(size_t n, uint64_t rng_seed = 0);

    // |0...0> on n qubits.
    static StabilizerTableau zero_state(size_t n, uint64_t rng_seed = 0);

    size_t num_qubits() const { return n_; }
    size_t rank() const { return stab_.size(); }
    const std::vector<PauliString>& stabilizers() const { return stab_; }
    const std::vector<PauliString>& destabilizers() const { return destab_; }

    Rng& rng() { return rng_; }
    void reseed(uint64_t seed) { rng_ = Rng(seed); }

    // Measure a Hermitian Pauli. Throws on non-Hermitian input or size
    // mismatch. Rank never decreases.
    MeasureResult measure(const PauliString& p, MeasurePolicy policy);

    // Measure with a pinned outcome. The outcome must be free (random) or
    // already determined with the same value; otherwise throws.
    MeasureResult measure_forced(const PauliString& p, int outcome);

    // Outcome if p is determined by the current group, nullopt otherwise.
    // Read-only.
    std::optional<int> deterministic_outcome(const PauliString& p) const;

    // Conjugate the whole tableau by CZ / H / S on the given qubits.
    void apply_cz(size_t a, size_t b);
    void apply_h(size_t q);

    // Unique signed reduced-row-echelon generating set of the stabilizer
    // group (pivot order: x-block then z-block).
    std::vector<PauliString> canonical_stabilizers() const;

    // Canonical form of an explicit generating list; dependent generators
    // are dropped. Throws std::invalid_argument if the list generates -I.
    static std::vector<PauliString> canonical_form(std::vector<PauliString> gens);

    static size_t gf2_rank(const std::vector<PauliString>& gens);

    bool groups_equal(const StabilizerTableau& other) const;
    static bool groups_equal(const std::vector<PauliString>& a,
                             const std::vector<PauliString>& b);

    // Line-based text format, one "+XXI" row per stabilizer.
    void serialize(std::ostream& out) const;

  private:
    enum class RowKind { Stab, Destab, Free };
    MeasureResult measure_random_case(const PauliString& p, MeasurePolicy policy,
                                      RowKind pivot_kind, size_t pivot_index);
    int resolve_deterministic(const PauliString& p) const;

    size_t n_;
    Rng rng_;
    std::vector<PauliString> stab_;
    std::vector<PauliString> destab_;
    // Conjugate pairs (free_[2t], free_[2t+1]) spanning the unfixed
    // directions; pair members anticommute, everything else commutes.
    std::vector<PauliString> free_;
};

}  // namespace autolab

#endif
