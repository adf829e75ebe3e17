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

#ifndef AUTOLAB_KW_HPP
#define AUTOLAB_KW_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "autolab/lattice.hpp"
#include "autolab/tableau.hpp"

namespace autolab::kw {

// Measurement record of one Kramers-Wannier plaquette channel on 2N qubits.
// Positions run 1..2N around the plaquette; odd positions carry the
// incoming state, even positions the outgoing one. Bits are stored
// 0-indexed: r[i] is r_{i+1}.
struct KWRecord {
    int plaquette = -1;
    int half_size = 3;  // N
    std::vector<uint8_t> r;
    std::vector<uint8_t> m;

    KWRecord() = default;
    explicit KWRecord(int n_half, int plaq = -1)
        : plaquette(plaq), half_size(n_half),
          r(static_cast<size_t>(2 * n_half), 0),
          m(static_cast<size_t>(2 * n_half), 0) {}

    int size() const { return 2 * half_size; }
    uint8_t r_at(int pos) const {  // pos in 1..2N, cyclic
        return r[static_cast<size_t>(((pos - 1) % size() + size()) % size())];
    }
    uint8_t m_at(int pos) const {
        return m[static_cast<size_t>(((pos - 1) % size() + size()) % size())];
    }

    // Frame bit of ring position pos: mu_pos = m_{pos-1} + r_{pos+1}.
    // Odd positions reproduce the sign in X_odd -> Z Z, even positions the
    // sign in Z Z -> X_even.
    int mu(int pos) const { return m_at(pos - 1) ^ r_at(pos + 1); }

    // (-1)^{sum_j m_{2j} + r_{2j}}: outcome of measuring X_1 X_3 ... on the
    // incoming state.
    int measured_sign() const;
    // (-1)^{sum_j m_{2j+1} + r_{2j+1}}: sign of the prepared X_2 X_4 ...
    int prepared_sign() const;

    std::string to_json() const;
};

// Sign of <a_out | KW_{r,m} | a_in> up to the pattern's global
// normalization; a_in are the odd-position bits (a_1, a_3, ...), a_out the
// even-position bits.
int matrix_element(const std::vector<int>& a_out, const std::vector<int>& a_in,
                   const KWRecord& rec);

// Qubit roles of one plaquette channel. ring[k] holds the tableau qubit at
// position k+1; odd positions (ring[0], ring[2], ring[4]) are the incoming
// qubits and end the round decoupled in the X basis, even positions carry
// the output.
struct PlaquetteIO {
    int plaquette = -1;
    std::array<int, 6> ring{};

    std::array<int, 3> odd_qubits() const { return {ring[0], ring[2], ring[4]}; }
    std::array<int, 3> even_qubits() const { return {ring[1], ring[3], ring[5]}; }
};

// Ring assignment for a plaquette of the hexagonal torus at its own round:
// a_1 is the incoming boundary edge with the smallest id, positions
// increase counterclockwise.
PlaquetteIO io_for(const HexTorus& hex, int plaquette);

// Reference realization: flush the even qubits in X, entangle each even
// qubit with its odd neighbors by controlled-phase, measure the odd qubits
// in X, and record the 2N ancilla coins that complete the (r, m) split.
KWRecord apply_reference(StabilizerTableau& t, const PlaquetteIO& io,
                         MeasurePolicy policy);

// Reference realization driven to reproduce a given record. Every
// measurement that the record pins must either be free (random) or already
// agree; throws std::runtime_error otherwise.
KWRecord apply_reference_forced(StabilizerTableau& t, const PlaquetteIO& io,
                                const KWRecord& want);

// All-measurement compilation: one- and two-qubit Pauli measurements only.
// Each controlled-phase of the reference is replaced by the ancilla
// sequence Z_o Z_c, X_c Z_e, Z_c (lattice-surgery style), with the
// resulting Pauli frame folded into the record. anc[k] assists ring bond
// (ring[k], ring[k+1]).
KWRecord apply_all_measurement(StabilizerTableau& t, const PlaquetteIO& io,
                               const std::array<int, 6>& anc,
                               MeasurePolicy policy);
KWRecord apply_all_measurement_forced(StabilizerTableau& t,
                                      const PlaquetteIO& io,
                                      const std::array<int, 6>& anc,
                                      const KWRecord& want);

// Dense-oracle view of the reference channel at N=3: the 8x8 conditional
// matrix for each of the 64 frame patterns. Entry [mu] is the channel
// conditioned on frame bits mu (mu bit k-1 = ring position k).
struct DenseChannels {
    std::vector<std::vector<std::vector<std::complex<double>>>> by_mu;
    int frame_of_record(const KWRecord& rec) const;
};
DenseChannels dense_reference_channels();

// Exhaustive comparison of the dense channel against the matrix-element
// formula over all 2^{2N} x 2^{2N} = 4096 outcome patterns.
struct MatrixElementCheck {
    bool pass = false;
    double max_err = 0.0;
    long patterns_checked = 0;
};
MatrixElementCheck verify_matrix_elements(double tol,
                                          bool inject_sign_error = false);

}  // namespace autolab::kw

#endif
