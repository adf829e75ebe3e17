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

#ifndef AUTOLAB_FAMILY_HPP
#define AUTOLAB_FAMILY_HPP

#include <vector>

#include "autolab/clifford.hpp"
#include "autolab/dense.hpp"
#include "autolab/lattice.hpp"

namespace autolab::family {

using dense::Mat;

// Kramers-Wannier isometry on an N-site ring:
//   D X_q = Z_q Z_{q+1} D,   D Z_q Z_{q+1} = X_{q+1} D,
//   D+ D = 1 + X_0 ... X_{N-1}.
Mat build_d(int n_sites);

// J = (D + Z_0 D Z_0) / sqrt(2) on three sites; unitary, commutes with
// X_0 X_1 X_2, and acts as a Clifford.
Mat build_j();

struct JFactorization {
    Mat m;                            // unitary
    std::vector<std::complex<double>> lambda;  // unimodular eigenvalues
    std::vector<double> alpha;        // phases in (-pi, pi]
};
JFactorization j_factorization();

// Eigenphase interpolation: identity for t <= 0, J for t >= 1.
Mat j_tilde(double t);

// The conjugation action of J extracted as a symbolic Clifford map.
CliffordMap j_clifford();

// One-parameter family of commuting-projector Hamiltonians on the
// triangular torus. H(r) pattern: a six-body vertex-type term attached to
// every color-r upward triangle and a three-body face-type term attached to
// every other upward triangle; conjugating by J on all color-c triangles
// advances the pattern by one color.
class TriFamily {
  public:
    explicit TriFamily(int l);

    const TriTorus& torus() const { return tri_; }
    int num_qubits() const { return tri_.num_vertices(); }

    // Signed Pauli terms of H^(r), in a deterministic order.
    std::vector<PauliString> terms(int r) const;
    // Dense Hamiltonian -sum(terms); L = 3 only.
    Mat hamiltonian(int r) const;

    // J applied to every color-c upward triangle, as a symbolic Clifford.
    CliffordMap pump(int c) const;
    // One full period U(3) = W_2 W_1 W_0.
    CliffordMap period() const;

    // Logical representatives of the H^(r) stabilizer group: four coset
    // generators of centralizer / group.
    std::vector<PauliString> logical_reps(int r) const;

  private:
    PauliString place_glyph(int base_vertex, const int (*glyph)[3], int count,
                            int sign) const;
    TriTorus tri_;
};

struct FamilyReport {
    bool pump_maps_terms = false;     // W_c(terms of H^(c)) == terms of H^(c+1)
    bool conj_identity = false;       // dense ||H(t=r) - H^{(r+2 mod 3)}||
    double max_conj_err = 0.0;
    bool terms_commute = false;
    double max_comm_norm = 0.0;
    bool ground_dim_ok = false;
    int ground_dim = 0;
    bool rank_ok = false;             // n - 2 independent stabilizers
    bool string_swap_ok = false;      // period() exchanges the two logical types
    bool j_algebra_ok = false;        // D/J identities to 1e-12
    double max_j_err = 0.0;

    bool pass() const {
        return pump_maps_terms && conj_identity && terms_commute &&
               ground_dim_ok && rank_ok && string_swap_ok && j_algebra_ok;
    }
};

// Full verification at the dense-tractable size (L = 3 torus, 9 qubits).
FamilyReport verify_family(int l = 3);

}  // namespace autolab::family

#endif
