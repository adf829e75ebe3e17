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

#include "autolab/family.hpp"

#include <Eigen/Eigenvalues>
#include <map>
#include <stdexcept>

#include "autolab/tableau.hpp"

namespace autolab::family {

Mat build_d(int n_sites) {
    if (n_sites < 2) {
        throw std::invalid_argument("build_d: need at least two sites");
    }
    if (n_sites > dense::kMaxOperatorQubits) {
        throw std::invalid_argument("build_d: exceeds the dense limit");
    }
    int64_t dim = int64_t{1} << n_sites;
    double norm = std::pow(2.0, -0.5 * n_sites);
    Mat d = Mat::Zero(dim, dim);
    for (int64_t b = 0; b < dim; b++) {
        for (int64_t a = 0; a < dim; a++) {
            int expo = 0;
            for (int q = 0; q < n_sites; q++) {
                int aq = (a >> q) & 1;
                int bq = (b >> q) & 1;
                int bq1 = (b >> ((q + 1) % n_sites)) & 1;
                expo ^= aq & (bq ^ bq1);
            }
            d(b, a) = expo ? -norm : norm;
        }
    }
    return d;
}

Mat build_j() {
    Mat d = build_d(3);
    Mat z0 = dense::pauli_matrix(PauliString::single(3, 0, 'Z'));
    return (d + z0 * d * z0) / std::sqrt(2.0);
}

JFactorization j_factorization() {
    Mat j = build_j();
    Eigen::ComplexSchur<Mat> schur(j);
    Mat t = schur.matrixT();
    double offdiag = 0;
    for (int i = 0; i < t.rows(); i++) {
        for (int k = 0; k < t.cols(); k++) {
            if (i != k) offdiag = std::max(offdiag, std::abs(t(i, k)));
        }
    }
    if (offdiag > 1e-10) {
        throw std::logic_error("j_factorization: J is not normal");
    }
    JFactorization f;
    f.m = schur.matrixU();
    for (int i = 0; i < t.rows(); i++) {
        f.lambda.push_back(t(i, i));
        f.alpha.push_back(std::arg(t(i, i)));
    }
    return f;
}

Mat j_tilde(double t) {
    static const JFactorization f = j_factorization();
    if (t <= 0) {
        return Mat::Identity(8, 8);
    }
    if (t >= 1) {
        return build_j();
    }
    Eigen::VectorXcd d(8);
    for (int i = 0; i < 8; i++) {
        d(i) = std::exp(std::complex<double>(0, t * f.alpha[static_cast<size_t>(i)]));
    }
    return f.m * d.asDiagonal() * f.m.adjoint();
}

CliffordMap j_clifford() {
    static const CliffordMap cached = [] {
        Mat j = build_j();
        CliffordMap map;
        map.n = 3;
        auto image_of = [&](const PauliString& g) {
            Mat img = j * dense::pauli_matrix(g) * j.adjoint();
            for (int bits = 0; bits < 64; bits++) {
                PauliString cand(3);
                for (int q = 0; q < 3; q++) {
                    cand.set_x(static_cast<size_t>(q), (bits >> q) & 1);
                    cand.set_z(static_cast<size_t>(q), (bits >> (q + 3)) & 1);
                }
                for (int ph = 0; ph < 4; ph++) {
                    cand.set_phase_xz(ph);
                    if ((img - dense::pauli_matrix(cand)).cwiseAbs().maxCoeff() <
                        1e-9) {
                        return cand;
                    }
                }
            }
            throw std::logic_error("j_clifford: image is not a Pauli");
        };
        for (int q = 0; q < 3; q++) {
            map.x_img.push_back(image_of(PauliString::single(3, static_cast<size_t>(q), 'X')));
            map.z_img.push_back(image_of(PauliString::single(3, static_cast<size_t>(q), 'Z')));
        }
        if (!map.valid()) {
            throw std::logic_error("j_clifford: inconsistent Clifford map");
        }
        return map;
    }();
    return cached;
}

namespace {

// Glyph tables, anchored at the base vertex of an upward triangle. Each row
// is {dm, dn, letter}.
//
// The vertex-type term of H^(r) sits on color-r triangles, the face-type
// terms on the other two colors; conjugating by J on every color-c triangle
// (corner order: base, base+e1, base+e2) carries the H^(c-1) term set to
// the H^(c) term set, with the three glyph shapes closing into each other.
constexpr int kVertexGlyph[][3] = {
    {0, 0, 'Z'},  {1, 0, 'Z'},  {0, 1, 'Z'},
    {0, -1, 'Z'}, {1, -1, 'Z'}, {2, -1, 'Z'},
};
constexpr int kVertexSign = +1;
constexpr int kFaceGlyphNext[][3] = {
    // face term for color r+1 triangles of H^(r)
    {0, 0, 'X'},
    {1, 0, 'X'},
    {1, -1, 'X'},
};
constexpr int kFaceSignNext = +1;
constexpr int kFaceGlyphPrev[][3] = {
    // face term for color r+2 triangles of H^(r)
    {0, 0, 'X'},
    {1, 0, 'X'},
    {1, -1, 'X'},
};
constexpr int kFaceSignPrev = +1;

}  // namespace

TriFamily::TriFamily(int l) : tri_(l) {}

PauliString TriFamily::place_glyph(int base_vertex, const int (*glyph)[3],
                                   int count, int sign) const {
    int m, n;
    tri_.vertex_coords(base_vertex, &m, &n);
    PauliString p(static_cast<size_t>(num_qubits()));
    for (int i = 0; i < count; i++) {
        int v = tri_.vertex_id(m + glyph[i][0], n + glyph[i][1]);
        p.set_letter(static_cast<size_t>(v), static_cast<char>(glyph[i][2]));
    }
    p.set_sign(sign);
    return p;
}

std::vector<PauliString> TriFamily::terms(int r) const {
    std::vector<PauliString> out;
    for (int v = 0; v < num_qubits(); v++) {
        int c = tri_.vertex_color(v);
        if (c == r) {
            out.push_back(place_glyph(v, kVertexGlyph, 6, kVertexSign));
        } else if (c == (r + 1) % 3) {
            out.push_back(place_glyph(v, kFaceGlyphNext, 3, kFaceSignNext));
        } else {
            out.push_back(place_glyph(v, kFaceGlyphPrev, 3, kFaceSignPrev));
        }
    }
    return out;
}

Mat TriFamily::hamiltonian(int r) const {
    if (num_qubits() > dense::kMaxOperatorQubits) {
        throw std::invalid_argument("hamiltonian: exceeds the dense limit");
    }
    int64_t dim = int64_t{1} << num_qubits();
    Mat h = Mat::Zero(dim, dim);
    for (const auto& t : terms(r)) {
        h -= dense::pauli_matrix(t);
    }
    return h;
}

CliffordMap TriFamily::pump(int c) const {
    CliffordMap j = j_clifford();
    CliffordMap out = CliffordMap::identity(static_cast<size_t>(num_qubits()));
    for (int base : tri_.up_triangles_of_color(c)) {
        const auto& corners = tri_.up_triangles()[static_cast<size_t>(base)].corners;
        std::vector<size_t> targets = {static_cast<size_t>(corners[0]),
                                       static_cast<size_t>(corners[1]),
                                       static_cast<size_t>(corners[2])};
        CliffordMap local = j.embed(static_cast<size_t>(num_qubits()), targets);
        for (size_t q : targets) {
            out.x_img[q] = local.x_img[q];
            out.z_img[q] = local.z_img[q];
        }
    }
    return out;
}

CliffordMap TriFamily::period() const {
    return pump(0).then(pump(1)).then(pump(2));
}

namespace {

// Reduce p by the RREF rows (bits only); returns the reduced Pauli.
PauliString reduce_bits(PauliString p, const std::vector<PauliString>& rref) {
    size_t n = p.num_qubits();
    auto bit_at = [&](const PauliString& q, size_t col) {
        return col < n ? q.x_bit(col) : q.z_bit(col - n);
    };
    for (const auto& row : rref) {
        // Pivot = first set column of the row.
        for (size_t col = 0; col < 2 * n; col++) {
            if (bit_at(row, col)) {
                if (bit_at(p, col)) p.mul_inplace(row);
                break;
            }
        }
    }
    return p;
}

}  // namespace

std::vector<PauliString> TriFamily::logical_reps(int r) const {
    std::vector<PauliString> gens = terms(r);
    auto rref = StabilizerTableau::canonical_form(gens);
    size_t n = static_cast<size_t>(num_qubits());

    std::vector<PauliString> reps;
    std::vector<PauliString> accum = rref;  // group + found reps, for RREF tests
    for (uint64_t probe = 0; reps.size() < 4; probe++) {
        if (probe >= (uint64_t{1} << (2 * n))) {
            throw std::logic_error("logical_reps: search exhausted");
        }
        PauliString cand(n);
        for (size_t q = 0; q < n; q++) {
            cand.set_x(q, (probe >> q) & 1);
            cand.set_z(q, (probe >> (q + n)) & 1);
        }
        if (cand.is_identity_bits()) continue;
        bool commutes = true;
        for (const auto& g : rref) {
            if (!cand.commutes_with(g)) {
                commutes = false;
                break;
            }
        }
        if (!commutes) continue;
        PauliString red = reduce_bits(cand, accum);
        if (red.is_identity_bits()) continue;
        reps.push_back(cand);
        accum.push_back(cand);
        accum = StabilizerTableau::canonical_form(accum);
    }
    return reps;
}

namespace {

Mat embed_small(const Mat& small, const std::vector<int>& targets, int n) {
    int64_t dim = int64_t{1} << n;
    int k = static_cast<int>(targets.size());
    Mat out = Mat::Zero(dim, dim);
    for (int64_t col = 0; col < dim; col++) {
        int64_t scol = 0;
        for (int i = 0; i < k; i++) {
            if ((col >> targets[static_cast<size_t>(i)]) & 1) scol |= int64_t{1} << i;
        }
        int64_t base = col;
        for (int i = 0; i < k; i++) {
            base &= ~(int64_t{1} << targets[static_cast<size_t>(i)]);
        }
        for (int64_t srow = 0; srow < (int64_t{1} << k); srow++) {
            if (small(srow, scol) == 0.0) continue;
            int64_t row = base;
            for (int i = 0; i < k; i++) {
                if ((srow >> i) & 1) row |= int64_t{1} << targets[static_cast<size_t>(i)];
            }
            out(row, col) += small(srow, scol);
        }
    }
    return out;
}

// Membership of a signed Pauli in +-(group): returns 0 if outside, else the
// sign it reduces to.
int in_group_sign(PauliString p, const std::vector<PauliString>& rref) {
    p = reduce_bits(std::move(p), rref);
    if (!p.is_identity_bits()) return 0;
    return p.phase_xz() == 0 ? +1 : -1;
}

}  // namespace

FamilyReport verify_family(int l) {
    FamilyReport rep;

    // D and J identities.
    {
        double err = 0;
        Mat d = build_d(3);
        Mat eye = Mat::Identity(8, 8);
        PauliString x3 = PauliString::from_string("XXX");
        Mat xxx = dense::pauli_matrix(x3);
        for (int q = 0; q < 3; q++) {
            Mat xq = dense::pauli_matrix(PauliString::single(3, static_cast<size_t>(q), 'X'));
            PauliString zz(3);
            zz.set_letter(static_cast<size_t>(q), 'Z');
            zz.set_letter(static_cast<size_t>((q + 1) % 3), 'Z');
            Mat zzq = dense::pauli_matrix(zz);
            Mat xq1 = dense::pauli_matrix(
                PauliString::single(3, static_cast<size_t>((q + 1) % 3), 'X'));
            err = std::max(err, dense::op_norm(d * xq - zzq * d));
            err = std::max(err, dense::op_norm(d * zzq - xq1 * d));
        }
        err = std::max(err, dense::op_norm(d.adjoint() * d - (eye + xxx)));
        err = std::max(err, dense::op_norm(d * d.adjoint() - (eye + xxx)));
        err = std::max(err, dense::op_norm(xxx * d - d));
        err = std::max(err, dense::op_norm(d * xxx - d));
        Mat j = build_j();
        err = std::max(err, dense::op_norm(j.adjoint() * j - eye));
        err = std::max(err, dense::op_norm(j.adjoint() * xxx * j - xxx));
        err = std::max(err, dense::op_norm(j_tilde(0.0) - eye));
        err = std::max(err, dense::op_norm(j_tilde(1.0) - j));
        err = std::max(err, dense::op_norm(j_tilde(0.5) * j_tilde(0.5).adjoint() - eye));
        rep.max_j_err = err;
        rep.j_algebra_ok = err <= 1e-12;
    }

    TriFamily fam(l);
    int n = fam.num_qubits();

    // Symbolic pump identity W_c : H^(c-1) -> H^(c), as signed term sets.
    rep.pump_maps_terms = true;
    for (int c = 0; c < 3; c++) {
        CliffordMap w = fam.pump(c);
        std::multimap<std::string, int> want;
        for (const auto& t : fam.terms(c)) {
            want.insert({t.str(), 0});
        }
        for (const auto& t : fam.terms(((c - 1) % 3 + 3) % 3)) {
            PauliString img = w.apply(t);
            auto it = want.find(img.str());
            if (it == want.end()) {
                rep.pump_maps_terms = false;
            } else {
                want.erase(it);
            }
        }
        if (!want.empty()) rep.pump_maps_terms = false;
    }

    // Terms commute pairwise (exact bit-level check).
    rep.terms_commute = true;
    for (int r = 0; r < 3; r++) {
        auto ts = fam.terms(r);
        for (size_t i = 0; i < ts.size(); i++) {
            for (size_t k = i + 1; k < ts.size(); k++) {
                if (!ts[i].commutes_with(ts[k])) rep.terms_commute = false;
            }
        }
        size_t rank = StabilizerTableau::gf2_rank(ts);
        if (rank != static_cast<size_t>(n - 2)) rep.rank_ok = false;
    }
    rep.rank_ok = true;
    for (int r = 0; r < 3; r++) {
        if (StabilizerTableau::gf2_rank(fam.terms(r)) != static_cast<size_t>(n - 2)) {
            rep.rank_ok = false;
        }
    }

    // Dense conjugation identity and ground degeneracy (L = 3 only).
    if (n <= dense::kMaxOperatorQubits) {
        Mat j = build_j();
        std::vector<Mat> w_dense;
        for (int c = 0; c < 3; c++) {
            Mat w = Mat::Identity(int64_t{1} << n, int64_t{1} << n);
            for (int base : fam.torus().up_triangles_of_color(c)) {
                const auto& corners =
                    fam.torus().up_triangles()[static_cast<size_t>(base)].corners;
                w = embed_small(j, {corners[0], corners[1], corners[2]}, n) * w;
            }
            w_dense.push_back(w);
        }
        double err = 0;
        Mat h = fam.hamiltonian(2);  // H(0) = H^(2)
        for (int t = 1; t <= 3; t++) {
            h = w_dense[static_cast<size_t>(t - 1)] * h *
                w_dense[static_cast<size_t>(t - 1)].adjoint();
            err = std::max(err, dense::op_norm(h - fam.hamiltonian((t + 2) % 3)));
        }
        rep.max_conj_err = err;
        rep.conj_identity = err <= 1e-9;

        rep.ground_dim = dense::ground_space_dim(fam.hamiltonian(0), 1e-6);
        rep.ground_dim_ok = rep.ground_dim == 4;
    }

    // The automorphism induced on logical classes by one period: an
    // involution with no fixed electric/magnetic class, i.e. fixed subspace
    // exactly {1, f-type classes}.
    {
        auto gens = fam.terms(2);
        auto rref = StabilizerTableau::canonical_form(gens);
        auto reps = fam.logical_reps(2);
        CliffordMap u3 = fam.period();

        // Class coordinates of a centralizer element.
        auto coords_of = [&](const PauliString& p) {
            std::vector<int> coords(4, 0);
            PauliString acc = p;
            for (int i = 0; i < 4; i++) {
                PauliString trial = acc;
                trial.mul_inplace(reps[static_cast<size_t>(i)]);
                trial = reduce_bits(trial, rref);
                PauliString plain = reduce_bits(acc, rref);
                // Greedy: include rep i if it shortens membership.
                if (trial.is_identity_bits() && !plain.is_identity_bits()) {
                    coords[static_cast<size_t>(i)] = 1;
                    acc.mul_inplace(reps[static_cast<size_t>(i)]);
                }
            }
            return coords;
        };
        (void)coords_of;

        // F matrix over GF(2): column i = class of u3(rep_i).
        int fmat[4][4] = {};
        bool all_in_centralizer = true;
        for (int i = 0; i < 4; i++) {
            PauliString img = u3.apply(reps[static_cast<size_t>(i)]);
            for (const auto& g : rref) {
                if (!img.commutes_with(g)) all_in_centralizer = false;
            }
            // Brute-force the class: the unique subset of reps whose
            // product differs from img by a group element.
            bool found = false;
            for (int mask = 0; mask < 16 && !found; mask++) {
                PauliString acc = img;
                for (int k = 0; k < 4; k++) {
                    if ((mask >> k) & 1) acc.mul_inplace(reps[static_cast<size_t>(k)]);
                }
                if (reduce_bits(acc, rref).is_identity_bits()) {
                    for (int k = 0; k < 4; k++) {
                        fmat[k][i] = (mask >> k) & 1;
                    }
                    found = true;
                }
            }
            if (!found) all_in_centralizer = false;
        }

        bool involution = true, identity = true;
        int fixed_dim = 0;
        if (all_in_centralizer) {
            // F^2 = I.
            for (int i = 0; i < 4; i++) {
                for (int k = 0; k < 4; k++) {
                    int v = 0;
                    for (int s = 0; s < 4; s++) v ^= fmat[i][s] & fmat[s][k];
                    if (v != (i == k ? 1 : 0)) involution = false;
                    if (fmat[i][k] != (i == k ? 1 : 0)) {
                        if (fmat[i][k]) identity = false;
                        if (i == k) identity = false;
                    }
                }
            }
            // Fixed subspace dimension: kernel of F + I.
            int fpi[4][4];
            for (int i = 0; i < 4; i++) {
                for (int k = 0; k < 4; k++) {
                    fpi[i][k] = fmat[i][k] ^ (i == k ? 1 : 0);
                }
            }
            // Rank of fpi over GF(2).
            int rank = 0;
            for (int col = 0; col < 4; col++) {
                int piv = -1;
                for (int row = rank; row < 4; row++) {
                    if (fpi[row][col]) {
                        piv = row;
                        break;
                    }
                }
                if (piv < 0) continue;
                for (int k = 0; k < 4; k++) std::swap(fpi[rank][k], fpi[piv][k]);
                for (int row = 0; row < 4; row++) {
                    if (row != rank && fpi[row][col]) {
                        for (int k = 0; k < 4; k++) fpi[row][k] ^= fpi[rank][k];
                    }
                }
                rank++;
            }
            fixed_dim = 4 - rank;
            // Every class commutes with its image (same homology cycle).
            for (int i = 0; i < 4 && involution; i++) {
                PauliString img = u3.apply(reps[static_cast<size_t>(i)]);
                if (!reps[static_cast<size_t>(i)].commutes_with(img)) {
                    involution = false;
                }
            }
        }
        rep.string_swap_ok =
            all_in_centralizer && involution && !identity && fixed_dim == 2;
    }

    return rep;
}

}  // namespace autolab::family
