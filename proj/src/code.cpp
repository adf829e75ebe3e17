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

#include "autolab/code.hpp"

#include <optional>
#include <stdexcept>

namespace autolab {

namespace {

// Solve M x = rhs over GF(2); rows are bitmasks over nvars variables.
// Returns one solution (free variables zero), or nullopt.
std::optional<std::vector<uint64_t>> solve_gf2(
    std::vector<std::vector<uint64_t>> rows, std::vector<int> rhs, int nvars) {
    size_t words = bitops::words_for_bits(static_cast<size_t>(nvars));
    size_t nrows = rows.size();
    std::vector<int> pivot_col(nrows, -1);
    size_t rank = 0;
    for (int col = 0; col < nvars && rank < nrows; col++) {
        size_t w = static_cast<size_t>(col) >> 6;
        uint64_t bit = uint64_t{1} << (col & 63);
        size_t found = nrows;
        for (size_t rr = rank; rr < nrows; rr++) {
            if (rows[rr][w] & bit) {
                found = rr;
                break;
            }
        }
        if (found == nrows) continue;
        std::swap(rows[rank], rows[found]);
        std::swap(rhs[rank], rhs[found]);
        for (size_t rr = 0; rr < nrows; rr++) {
            if (rr != rank && (rows[rr][w] & bit)) {
                bitops::xor_rows(rows[rr].data(), rows[rank].data(), words);
                rhs[rr] ^= rhs[rank];
            }
        }
        pivot_col[rank] = col;
        rank++;
    }
    for (size_t rr = rank; rr < nrows; rr++) {
        if (rhs[rr]) return std::nullopt;  // inconsistent
    }
    std::vector<uint64_t> x(words, 0);
    for (size_t rr = 0; rr < rank; rr++) {
        if (rhs[rr]) {
            x[static_cast<size_t>(pivot_col[rr]) >> 6] |=
                uint64_t{1} << (pivot_col[rr] & 63);
        }
    }
    return x;
}

}  // namespace

EmCode::EmCode(int l1, int l2, uint64_t seed)
    : hex_(l1, l2),
      tab_(static_cast<size_t>(hex_.num_edges()), seed),
      seed_(seed) {
    ledger_.s.assign(static_cast<size_t>(hex_.num_plaquettes()), 0);
    ledger_.dead_sign.assign(static_cast<size_t>(hex_.num_edges()), 0);
}

int EmCode::active_color() const {
    if (round_ < 1) {
        throw std::logic_error("active_color: no round has been run");
    }
    return ((round_ - 1) % 3 + 2) % 3;
}

RoundResult EmCode::run_round(MeasurePolicy policy) {
    int t = round_;
    int r = t % 3;
    RoundResult result;
    result.round = t;

    std::vector<int> s_before = ledger_.s;
    std::vector<int> flips(static_cast<size_t>(hex_.num_plaquettes()), 0);
    std::vector<int> new_s(static_cast<size_t>(hex_.num_plaquettes()), 0);
    int measured_product = +1;

    for (int p : hex_.plaquettes_of_color(r)) {
        kw::PlaquetteIO io = kw::io_for(hex_, p);

        // Flushed qubits must still hold their recorded dead signs.
        for (int q : io.even_qubits()) {
            int ds = ledger_.dead_sign[static_cast<size_t>(q)];
            if (ds != 0) {
                auto det = tab_.deterministic_outcome(
                    PauliString::single(tab_.num_qubits(), static_cast<size_t>(q), 'X'));
                if (!det.has_value() || *det != ds) {
                    result.measured_consistent = false;
                }
            }
        }

        tab_.reseed(Rng::mix(seed_, static_cast<uint64_t>(t),
                             static_cast<uint64_t>(p) + 1));
        kw::KWRecord rec = kw::apply_reference(tab_, io, policy);

        int meas = rec.measured_sign();
        measured_product *= meas;
        if (ledger_.s[static_cast<size_t>(p)] != 0 &&
            ledger_.s[static_cast<size_t>(p)] != meas) {
            result.measured_consistent = false;
        }
        new_s[static_cast<size_t>(p)] = rec.prepared_sign();

        // Every ring position feeds the sign update of the neighboring
        // plaquette across that edge: odd positions carry the 3X -> 6Z
        // transfer, even positions the 6Z -> 3X transfer.
        for (int pos = 1; pos <= 6; pos++) {
            int e = io.ring[static_cast<size_t>(pos - 1)];
            const HexTorus::Edge& ed = hex_.edge(e);
            int other = (ed.side[0] == p) ? ed.side[1] : ed.side[0];
            flips[static_cast<size_t>(other)] ^= rec.mu(pos);
        }
        for (int q : io.odd_qubits()) {
            int pos = (q == io.ring[0]) ? 1 : (q == io.ring[2]) ? 3 : 5;
            ledger_.dead_sign[static_cast<size_t>(q)] = rec.mu(pos) ? -1 : +1;
        }
        for (int q : io.even_qubits()) {
            ledger_.dead_sign[static_cast<size_t>(q)] = 0;
        }
        result.records.push_back(std::move(rec));
    }

    for (int p = 0; p < hex_.num_plaquettes(); p++) {
        if (hex_.plaquette_color(p) == r) {
            ledger_.s[static_cast<size_t>(p)] = new_s[static_cast<size_t>(p)];
        } else if (ledger_.s[static_cast<size_t>(p)] != 0 &&
                   flips[static_cast<size_t>(p)]) {
            ledger_.s[static_cast<size_t>(p)] = -ledger_.s[static_cast<size_t>(p)];
        }
    }
    ledger_.history.push_back(result.records);
    round_++;

    // Product-transfer identities.
    auto class_product = [&](const std::vector<int>& vals, int color) {
        int prod = +1;
        for (int p : hex_.plaquettes_of_color(color)) {
            if (vals[static_cast<size_t>(p)] == 0) return 0;
            prod *= vals[static_cast<size_t>(p)];
        }
        return prod;
    };
    int rm1 = ((r - 1) % 3 + 3) % 3;
    int rp1 = (r + 1) % 3;
    if (t >= 1) {
        int before = class_product(s_before, rm1);
        int after = class_product(ledger_.s, rm1);
        if (before != 0 && after != 0) {
            result.transfer_measured.applicable = true;
            result.transfer_measured.lhs = after;
            result.transfer_measured.rhs = measured_product * before;
            result.transfer_measured.ok =
                result.transfer_measured.lhs == result.transfer_measured.rhs;
        }
    }
    if (t >= 2) {
        int before = class_product(s_before, rp1);
        int after_r = class_product(ledger_.s, r);
        int after_rp1 = class_product(ledger_.s, rp1);
        if (before != 0 && after_r != 0 && after_rp1 != 0) {
            result.transfer_prepared.applicable = true;
            result.transfer_prepared.lhs = after_r * after_rp1;
            result.transfer_prepared.rhs = before;
            result.transfer_prepared.ok =
                result.transfer_prepared.lhs == result.transfer_prepared.rhs;
        }
    }
    return result;
}

std::vector<PauliString> EmCode::expected_isg() const {
    if (round_ < 1) {
        throw std::logic_error("expected_isg: no round has been run");
    }
    size_t n = tab_.num_qubits();
    int r = (round_ - 1) % 3;
    int out_type = (r + 2) % 3;
    std::vector<PauliString> gens;

    for (int e = 0; e < hex_.num_edges(); e++) {
        int ds = ledger_.dead_sign[static_cast<size_t>(e)];
        if (ds != 0) {
            PauliString p = PauliString::single(n, static_cast<size_t>(e), 'X');
            p.set_sign(ds);
            gens.push_back(p);
        }
    }
    for (int p = 0; p < hex_.num_plaquettes(); p++) {
        int s = ledger_.s[static_cast<size_t>(p)];
        if (s == 0) continue;
        int color = hex_.plaquette_color(p);
        PauliString gen(n);
        if (color == r || color == (r + 1) % 3) {
            // Three-X stabilizer on the active boundary edges.
            for (int be : hex_.plaquette(p).boundary_edges) {
                if (hex_.edge(be).type == out_type) {
                    gen.set_letter(static_cast<size_t>(be), 'X');
                }
            }
        } else {
            // Six-Z stabilizer on the edges terminating on the plaquette.
            for (int te : hex_.plaquette(p).terminating_edges) {
                gen.set_letter(static_cast<size_t>(te), 'Z');
            }
        }
        gen.set_sign(s);
        gens.push_back(gen);
    }
    return gens;
}

bool EmCode::isg_matches() const {
    return StabilizerTableau::groups_equal(tab_.stabilizers(), expected_isg());
}

PauliString EmCode::electric_loop(int dir) const {
    SuperLattice sl(hex_, active_color());
    PauliString loop(tab_.num_qubits());
    for (int e : sl.loop_edges(dir)) {
        loop.set_letter(static_cast<size_t>(e), 'X');
    }
    return loop;
}

PauliString EmCode::magnetic_loop(int dir) const {
    int a = active_color();
    std::vector<int> active = hex_.edges_of_type(a);
    std::vector<int> var_of_edge(static_cast<size_t>(hex_.num_edges()), -1);
    for (size_t i = 0; i < active.size(); i++) {
        var_of_edge[static_cast<size_t>(active[i])] = static_cast<int>(i);
    }
    int nvars = static_cast<int>(active.size());
    size_t words = bitops::words_for_bits(static_cast<size_t>(nvars));

    auto row_of_edges = [&](const std::vector<int>& es) {
        std::vector<uint64_t> row(words, 0);
        for (int e : es) {
            int v = var_of_edge[static_cast<size_t>(e)];
            if (v >= 0) row[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
        }
        return row;
    };

    std::vector<std::vector<uint64_t>> rows;
    std::vector<int> rhs;
    // Commute with every three-X plaquette stabilizer (even overlap).
    int r = (round_ - 1) % 3;
    for (int p = 0; p < hex_.num_plaquettes(); p++) {
        int color = hex_.plaquette_color(p);
        if (color != r && color != (r + 1) % 3) continue;
        std::vector<int> supp;
        for (int be : hex_.plaquette(p).boundary_edges) {
            if (hex_.edge(be).type == a) supp.push_back(be);
        }
        rows.push_back(row_of_edges(supp));
        rhs.push_back(0);
    }
    // Pairing against the two electric loops.
    SuperLattice sl(hex_, a);
    for (int d = 0; d < 2; d++) {
        rows.push_back(row_of_edges(sl.loop_edges(d)));
        rhs.push_back(d == (1 - dir) ? 1 : 0);
    }
    auto sol = solve_gf2(std::move(rows), std::move(rhs), nvars);
    if (!sol.has_value()) {
        throw std::logic_error("magnetic_loop: no dual loop found");
    }
    PauliString loop(tab_.num_qubits());
    for (int i = 0; i < nvars; i++) {
        if (((*sol)[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1) {
            loop.set_letter(static_cast<size_t>(active[static_cast<size_t>(i)]), 'Z');
        }
    }
    return loop;
}

}  // namespace autolab
