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

#ifndef AUTOLAB_HONEYCOMB_HPP
#define AUTOLAB_HONEYCOMB_HPP

#include <cstdint>
#include <vector>

#include "autolab/lattice.hpp"
#include "autolab/tableau.hpp"

namespace autolab {

// The honeycomb code on the same 3-colored torus: one qubit per vertex,
// two-qubit checks XX / YY / ZZ on type 0 / 1 / 2 edges, checks of type
// t mod 3 measured in round t.
class HoneycombCode {
  public:
    HoneycombCode(int l1, int l2, uint64_t seed);

    const HexTorus& lattice() const { return hex_; }
    StabilizerTableau& tableau() { return tab_; }
    int round_index() const { return round_; }

    PauliString check_op(int edge) const;
    // Product of the six checks around a plaquette.
    PauliString plaquette_op(int plaquette) const;

    struct Round {
        int round = 0;
        std::vector<int> edges;     // measured checks, ascending
        std::vector<int> outcomes;  // +-1 per edge above
    };
    Round run_round(MeasurePolicy policy);
    const std::vector<Round>& history() const { return history_; }

    // Product of the six boundary-check outcomes of plaquette p collected
    // over rounds t and t+1 (0 if those rounds don't cover the boundary).
    int two_round_plaquette_product(int p, int t) const;

  private:
    HexTorus hex_;
    StabilizerTableau tab_;
    int round_ = 0;
    uint64_t seed_;
    std::vector<Round> history_;
};

}  // namespace autolab

#endif
