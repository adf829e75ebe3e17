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

#ifndef AUTOLAB_CODE_HPP
#define AUTOLAB_CODE_HPP

#include <cstdint>
#include <vector>

#include "autolab/kw.hpp"
#include "autolab/lattice.hpp"
#include "autolab/tableau.hpp"

namespace autolab {

// Evolving plaquette-stabilizer signs s_p plus dead-edge signs, updated
// round by round from the Kramers-Wannier records.
struct SignLedger {
    std::vector<int> s;          // per plaquette; 0 = not yet defined
    std::vector<int> dead_sign;  // per edge; 0 = active / untouched
    std::vector<std::vector<kw::KWRecord>> history;  // per round
};

struct ProductCheck {
    bool applicable = false;
    bool ok = true;
    int lhs = +1;
    int rhs = +1;
};

struct RoundResult {
    int round = 0;
    std::vector<kw::KWRecord> records;
    // Re-measured plaquette signs agreed with the ledger (only plaquettes
    // with a previously defined value are checked).
    bool measured_consistent = true;
    // The two product-transfer identities relating consecutive rounds.
    ProductCheck transfer_measured;  // product over P^(r-1)
    ProductCheck transfer_prepared;  // product over P^(r) and P^(r+1)
};

// Period-3 scheduler of the measurement-based automorphism code: at round t
// the Kramers-Wannier channel runs on every plaquette of type t mod 3.
class EmCode {
  public:
    EmCode(int l1, int l2, uint64_t seed);

    const HexTorus& lattice() const { return hex_; }
    StabilizerTableau& tableau() { return tab_; }
    const StabilizerTableau& tableau() const { return tab_; }
    const SignLedger& ledger() const { return ledger_; }
    SignLedger& mutable_ledger() { return ledger_; }
    int round_index() const { return round_; }
    // Edge type carrying the data after the last completed round.
    int active_color() const;

    RoundResult run_round(MeasurePolicy policy);

    // Explicitly constructed signed generators of the expected
    // instantaneous stabilizer group after the last completed round.
    std::vector<PauliString> expected_isg() const;
    bool isg_matches() const;

    // X-type logical on a homologically nontrivial loop of the active
    // superlattice; dir in {0, 1} picks the torus cycle.
    PauliString electric_loop(int dir) const;
    // Z-type logical commuting with electric_loop(dir) and anticommuting
    // with electric_loop(1 - dir).
    PauliString magnetic_loop(int dir) const;

  private:
    HexTorus hex_;
    StabilizerTableau tab_;
    SignLedger ledger_;
    int round_ = 0;
    uint64_t seed_;
};

}  // namespace autolab

#endif
