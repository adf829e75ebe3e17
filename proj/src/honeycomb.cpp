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

#include "autolab/honeycomb.hpp"

#include <stdexcept>

namespace autolab {

namespace {
constexpr char kCheckLetter[3] = {'X', 'Y', 'Z'};
}

HoneycombCode::HoneycombCode(int l1, int l2, uint64_t seed)
    : hex_(l1, l2),
      tab_(static_cast<size_t>(hex_.num_vertices()), seed),
      seed_(seed) {}

PauliString HoneycombCode::check_op(int edge) const {
    const HexTorus::Edge& e = hex_.edge(edge);
    char letter = kCheckLetter[e.type];
    PauliString p(tab_.num_qubits());
    p.set_letter(static_cast<size_t>(e.v0), letter);
    p.set_letter(static_cast<size_t>(e.v1), letter);
    return p;
}

PauliString HoneycombCode::plaquette_op(int plaquette) const {
    PauliString prod = PauliString::identity(tab_.num_qubits());
    for (int e : hex_.plaquette(plaquette).boundary_edges) {
        prod.mul_inplace(check_op(e));
    }
    if (!prod.is_hermitian()) {
        throw std::logic_error("plaquette_op: product is not Hermitian");
    }
    return prod;
}

HoneycombCode::Round HoneycombCode::run_round(MeasurePolicy policy) {
    Round out;
    out.round = round_;
    int r = round_ % 3;
    for (int e : hex_.edges_of_type(r)) {
        tab_.reseed(Rng::mix(seed_, static_cast<uint64_t>(round_),
                             static_cast<uint64_t>(e) + 1));
        MeasureResult res = tab_.measure(check_op(e), policy);
        out.edges.push_back(e);
        out.outcomes.push_back(res.outcome);
    }
    history_.push_back(out);
    round_++;
    return history_.back();
}

int HoneycombCode::two_round_plaquette_product(int p, int t) const {
    if (t + 1 >= static_cast<int>(history_.size())) return 0;
    const HexTorus::Plaquette& pl = hex_.plaquette(p);
    // The boundary checks of plaquette p carry the two non-p colors; rounds
    // t and t+1 must measure exactly those.
    int prod = +1;
    int seen = 0;
    for (const Round* round : {&history_[static_cast<size_t>(t)],
                               &history_[static_cast<size_t>(t + 1)]}) {
        for (size_t i = 0; i < round->edges.size(); i++) {
            for (int be : pl.boundary_edges) {
                if (round->edges[i] == be) {
                    prod *= round->outcomes[i];
                    seen++;
                }
            }
        }
    }
    return seen == 6 ? prod : 0;
}

}  // namespace autolab
