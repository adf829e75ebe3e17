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

#include "autolab/fermion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <stdexcept>

namespace autolab::fermion {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Hexagon-center lattice conventions shared with the qubit lattices: a
// center (m, n) has color (m - n) mod 3, honeycomb vertices are the up and
// down triangles, and an edge's type is the color missing from its center
// pair. Edges are enumerated from each center along three directions.
struct CellEdge {
    int k;            // direction 0..2
    int type_delta;   // edge type = (c + type_delta) mod 3 for center color c
    // Endpoint triangles relative to the owning center: {dm, dn, up}.
    std::array<int, 3> end_up;
    std::array<int, 3> end_dn;
};

constexpr CellEdge kCellEdges[3] = {
    {0, 2, {0, 0, 1}, {0, -1, 0}},
    {1, 1, {0, 0, 1}, {-1, 0, 0}},
    {2, 2, {-1, 0, 1}, {-1, 0, 0}},
};

int mod(int a, int m) { return ((a % m) + m) % m; }

std::array<double, 2> center_pos(int m, int n) {
    return {m + 0.5 * n, n * std::sqrt(3.0) / 2.0};
}

std::array<double, 2> tri_pos(int m, int n, bool up) {
    auto a = center_pos(m, n);
    auto b = up ? center_pos(m + 1, n) : center_pos(m + 1, n);
    auto c = up ? center_pos(m, n + 1) : center_pos(m + 1, n + 1);
    if (!up) a = center_pos(m, n + 1);
    return {(a[0] + b[0] + c[0]) / 3, (a[1] + b[1] + c[1]) / 3};
}

}  // namespace

CouplingVector::CouplingVector(double x, double y, double z)
    : jx(x), jy(y), jz(z) {
    if (x < 0 || y < 0 || z < 0) {
        throw std::invalid_argument("CouplingVector: couplings must be >= 0");
    }
}

CouplingVector CouplingVector::normalized(double x, double y, double z) {
    double s = x + y + z;
    if (s <= 0) {
        throw std::invalid_argument("CouplingVector: zero norm");
    }
    return CouplingVector(x / s, y / s, z / s);
}

double CouplingVector::component(int type) const {
    switch (type) {
        case 0: return jx;
        case 1: return jy;
        case 2: return jz;
    }
    throw std::invalid_argument("CouplingVector: bad type");
}

double gap_formula(const CouplingVector& j) {
    double s = j.jx * j.jx + j.jy * j.jy + j.jz * j.jz - j.jx * j.jy -
               j.jy * j.jz - j.jz * j.jx;
    return 2.0 * std::sqrt(std::max(0.0, s));
}

double kekule_bloch_gap(const CouplingVector& j, int grid_n) {
    if (grid_n < 1) {
        throw std::invalid_argument("kekule_bloch_gap: empty grid");
    }
    // One cell holds three centers (colors 0,1,2 at +0, +t1, +2 t1) and six
    // Majorana sites (up/down triangle per center). Cell basis in center
    // coordinates: A1 = (1,1), A2 = (-1,2).
    struct Hop {
        int s, t;        // cell-site indices, s = up end, t = down end
        int di, dj;      // cell offset of t's cell relative to s's
        int type;
    };
    std::vector<Hop> hops;
    auto reduce = [&](int m, int n, bool up, int* site, int* di, int* dj) {
        int c = mod(m - n, 3);
        int jj = (n - m + c) / 3;
        int ii = m + jj - c;
        *site = c * 2 + (up ? 0 : 1);
        *di = ii;
        *dj = jj;
    };
    for (int c = 0; c < 3; c++) {
        int m = c, n = 0;  // canonical base of color-c center in cell (0,0)
        for (const CellEdge& e : kCellEdges) {
            int su, iu, ju, sd, id, jd;
            reduce(m + e.end_up[0], n + e.end_up[1], true, &su, &iu, &ju);
            reduce(m + e.end_dn[0], n + e.end_dn[1], false, &sd, &id, &jd);
            hops.push_back({su, sd, id - iu, jd - ju, mod(c + e.type_delta, 3)});
        }
    }

    std::vector<std::array<double, 2>> kpts;
    kpts.push_back({0.0, 0.0});
    for (int p = 0; p < grid_n; p++) {
        for (int q = 0; q < grid_n; q++) {
            kpts.push_back({2 * kPi * p / grid_n, 2 * kPi * q / grid_n});
        }
    }

    double min_eps = std::numeric_limits<double>::infinity();
    for (const auto& k : kpts) {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(6, 6);
        for (const Hop& h : hops) {
            std::complex<double> ph =
                std::exp(std::complex<double>(0, h.di * k[0] + h.dj * k[1]));
            double w = j.component(h.type);
            a(h.s, h.t) += w * ph;
            a(h.t, h.s) -= w * std::conj(ph);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            std::complex<double>(0, 1) * a, Eigen::EigenvaluesOnly);
        for (int i = 0; i < 6; i++) {
            min_eps = std::min(min_eps, std::abs(es.eigenvalues()(i)));
        }
    }
    return 2.0 * min_eps;
}

CouplingVector coupling_path(double theta, double lambda) {
    return CouplingVector(1.0 / 3 + lambda * std::cos(theta),
                          1.0 / 3 + lambda * std::cos(theta - 2 * kPi / 3),
                          1.0 / 3 + lambda * std::cos(theta + 2 * kPi / 3));
}

double ring_gap(int sites, double t, bool vortex) {
    if (sites < 2 || sites % 2 != 0) {
        throw std::invalid_argument("ring_gap: need an even number of sites");
    }
    if (t < 0 || t > 3) {
        throw std::invalid_argument("ring_gap: t must lie in [0, 3]");
    }
    int seg = std::min(2, static_cast<int>(std::floor(t)));
    double s = t - seg;
    // Each period segment interpolates between the two alternating perfect
    // matchings of the ring; odd segments run the fade in reverse.
    double w_even = (seg == 1) ? s : 1 - s;
    double w_odd = (seg == 1) ? 1 - s : s;

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(sites, sites);
    for (int q = 0; q < sites; q++) {
        double w = (q % 2 == 0) ? w_even : w_odd;
        if (q == sites - 1 && vortex) w = -w;
        a(q, (q + 1) % sites) += w;
        a((q + 1) % sites, q) -= w;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> svd(a.transpose() * a,
                                                       Eigen::EigenvaluesOnly);
    return 2.0 * std::sqrt(std::max(0.0, svd.eigenvalues().minCoeff()));
}

double ring_min_gap(int sites, bool vortex, int samples) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; i++) {
        double t = 3.0 * i / samples;
        best = std::min(best, ring_gap(sites, t, vortex));
    }
    return best;
}

DefectSpectrum defect_spectrum(int radial_cells, double lambda, int keep_modes) {
    if (radial_cells < 6) {
        throw std::invalid_argument("defect_spectrum: disc too small");
    }
    if (lambda < 0 || lambda >= 1.0 / 3) {
        throw std::invalid_argument("defect_spectrum: need 0 <= lambda < 1/3");
    }
    double radius = static_cast<double>(radial_cells);

    // Collect triangles (Majorana sites) within the disc.
    std::map<std::array<int, 3>, int> index;  // {m, n, up} -> site
    std::vector<std::array<double, 2>> pos;
    int bound = radial_cells + 3;
    for (int m = -bound; m <= bound; m++) {
        for (int n = -bound; n <= bound; n++) {
            for (int up = 0; up < 2; up++) {
                auto p = tri_pos(m, n, up == 1);
                if (std::hypot(p[0], p[1]) <= radius) {
                    index[{m, n, up}] = static_cast<int>(pos.size());
                    pos.push_back(p);
                }
            }
        }
    }
    int nsites = static_cast<int>(pos.size());

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nsites, nsites);
    for (int m = -bound; m <= bound; m++) {
        for (int n = -bound; n <= bound; n++) {
            int c = mod(m - n, 3);
            for (const CellEdge& e : kCellEdges) {
                auto iu = index.find({m + e.end_up[0], n + e.end_up[1], 1});
                auto id = index.find({m + e.end_dn[0], n + e.end_dn[1], 0});
                if (iu == index.end() || id == index.end()) continue;
                auto pu = pos[static_cast<size_t>(iu->second)];
                auto pd = pos[static_cast<size_t>(id->second)];
                double theta = std::atan2((pu[1] + pd[1]) / 2, (pu[0] + pd[0]) / 2);
                CouplingVector jj = coupling_path(theta, lambda);
                double w = jj.component(mod(c + e.type_delta, 3));
                a(iu->second, id->second) += w;
                a(id->second, iu->second) -= w;
            }
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a);
    DefectSpectrum out;
    out.num_modes = nsites;
    out.bulk_gap = gap_formula(coupling_path(0.0, lambda));
    for (int i = 0; i < std::min(keep_modes, nsites); i++) {
        out.energies.push_back(2.0 * std::sqrt(std::max(0.0, es.eigenvalues()(i))));
    }
    const auto& v = es.eigenvectors().col(0);
    double w_origin = 0;
    for (int i = 0; i < nsites; i++) {
        if (std::hypot(pos[static_cast<size_t>(i)][0], pos[static_cast<size_t>(i)][1]) <
            radius / 3) {
            w_origin += v(i) * v(i);
        }
    }
    out.origin_weight = w_origin;
    return out;
}

namespace {

// Greedy bipartite matching with augmenting paths (up-triangles left).
bool complete_matching(const std::vector<std::vector<int>>& adj,
                       std::vector<int>& match_left,
                       std::vector<int>& match_right) {
    size_t nl = adj.size();
    std::vector<int> seen;
    std::function<bool(int)> try_augment = [&](int u) -> bool {
        for (int v : adj[static_cast<size_t>(u)]) {
            if (seen[static_cast<size_t>(v)]) continue;
            seen[static_cast<size_t>(v)] = 1;
            if (match_right[static_cast<size_t>(v)] < 0 ||
                try_augment(match_right[static_cast<size_t>(v)])) {
                match_left[static_cast<size_t>(u)] = v;
                match_right[static_cast<size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    for (size_t u = 0; u < nl; u++) {
        if (match_left[u] >= 0 || adj[u].empty()) continue;
        seen.assign(match_right.size(), 0);
        if (!try_augment(static_cast<int>(u))) return false;
    }
    return true;
}

}  // namespace

UnrolledStrip build_unrolled_strip(int width_cells, int band_rows) {
    if (width_cells % 3 != 0 || width_cells < 3) {
        throw std::invalid_argument("build_unrolled_strip: width must be 3k");
    }
    int w = width_cells;
    int h = band_rows;
    // Margin rows of type-0 dimers below and above the three bands.
    int n_lo = -2 * h, n_hi = 3 * h + 2;

    UnrolledStrip strip;
    strip.width_cells = w;
    strip.period_x = w;

    std::map<std::array<int, 3>, int> index;
    std::vector<int> base_row;
    std::vector<bool> is_up;
    auto vertex_of = [&](int m, int n, bool up) -> int {
        if (n < n_lo || n > n_hi) return -1;
        int mm = mod(m, w);
        auto key = std::array<int, 3>{mm, n, up ? 1 : 0};
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(strip.pos.size());
        index[key] = id;
        strip.pos.push_back(tri_pos(mm, n, up));
        base_row.push_back(n);
        is_up.push_back(up);
        return id;
    };
    for (int m = 0; m < w; m++) {
        for (int n = n_lo; n <= n_hi; n++) {
            vertex_of(m, n, true);
            vertex_of(m, n, false);
        }
    }

    // Edge list; each edge joins one up and one down triangle, and its type
    // is the color missing from the center pair it separates.
    std::map<std::array<int, 2>, int> edge_type;
    for (int m = 0; m < w; m++) {
        for (int n = n_lo - 1; n <= n_hi + 1; n++) {
            int c = mod(m - n, 3);
            for (const CellEdge& e : kCellEdges) {
                int vu = vertex_of(m + e.end_up[0], n + e.end_up[1], true);
                int vd = vertex_of(m + e.end_dn[0], n + e.end_dn[1], false);
                if (vu < 0 || vd < 0) continue;
                edge_type[{vu, vd}] = mod(c + e.type_delta, 3);
            }
        }
    }

    auto build_config = [&](auto band_of, std::vector<int>* matched_out) {
        std::vector<std::array<int, 2>> dimers;
        std::vector<int> matched(strip.pos.size(), -1);
        for (const auto& [vs, type] : edge_type) {
            if (band_of(base_row[static_cast<size_t>(vs[0])]) == type &&
                band_of(base_row[static_cast<size_t>(vs[1])]) == type) {
                dimers.push_back({vs[0], vs[1]});
                matched[static_cast<size_t>(vs[0])] = vs[1];
                matched[static_cast<size_t>(vs[1])] = vs[0];
            }
        }
        *matched_out = matched;
        return dimers;
    };

    auto trivial_band = [](int) { return 0; };
    std::vector<int> matched_triv;
    strip.trivial_dimers = build_config(trivial_band, &matched_triv);

    // Banded configuration: type-0 margins, then bands of 1, 2, 0. Vertices
    // left over at the band interfaces are completed with any perfect
    // matching; rerouting the completion only moves crossings by closed
    // loops, which cannot change any crossing parity.
    for (int shift = 0; shift < 3; shift++) {
        auto band_of = [&](int n) {
            if (n < shift) return 0;
            if (n < h + shift) return 1;
            if (n < 2 * h + shift) return 2;
            return 0;
        };
        std::vector<int> matched;
        auto dimers = build_config(band_of, &matched);

        // Vertices needing completion: unmatched here but matched in the
        // reference configuration (so boundary leftovers cancel exactly).
        std::vector<std::vector<int>> adj(strip.pos.size());
        bool need = false;
        for (const auto& [vs, type] : edge_type) {
            (void)type;
            if (matched[static_cast<size_t>(vs[0])] < 0 &&
                matched[static_cast<size_t>(vs[1])] < 0 &&
                matched_triv[static_cast<size_t>(vs[0])] >= 0 &&
                matched_triv[static_cast<size_t>(vs[1])] >= 0) {
                adj[static_cast<size_t>(vs[0])].push_back(vs[1]);
                need = true;
            }
        }
        std::vector<int> ml(strip.pos.size(), -1), mr(strip.pos.size(), -1);
        bool ok = !need || complete_matching(adj, ml, mr);
        if (ok) {
            // Every vertex matched in the reference must now be matched.
            for (size_t v = 0; v < strip.pos.size(); v++) {
                if (matched_triv[v] >= 0 && matched[v] < 0 &&
                    ml[v] < 0 && mr[v] < 0) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        for (size_t v = 0; v < strip.pos.size(); v++) {
            if (ml[v] >= 0) dimers.push_back({static_cast<int>(v), ml[v]});
        }
        strip.path_dimers = dimers;
        return strip;
    }
    throw std::logic_error("build_unrolled_strip: no valid band completion");
}

int crossing_parity(const UnrolledStrip& strip,
                    const std::vector<std::array<int, 2>>& dimers, double cut_x) {
    int count = 0;
    double w = strip.period_x;
    for (const auto& d : dimers) {
        double xa = strip.pos[static_cast<size_t>(d[0])][0];
        double xb = strip.pos[static_cast<size_t>(d[1])][0];
        double dx = xb - xa;
        // Wrap to the shortest horizontal representative.
        while (dx > w / 2) dx -= w;
        while (dx < -w / 2) dx += w;
        double lo = std::min(xa, xa + dx), hi = std::max(xa, xa + dx);
        for (double shift : {-w, 0.0, w}) {
            if (lo < cut_x + shift && cut_x + shift < hi) count++;
        }
    }
    return count & 1;
}

ParityScan parity_difference_scan(const UnrolledStrip& strip) {
    // Cut positions between adjacent vertex columns within one period.
    std::vector<double> xs;
    for (const auto& p : strip.pos) {
        double x = std::fmod(std::fmod(p[0], strip.period_x) + strip.period_x,
                             strip.period_x);
        xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-9; }),
             xs.end());
    ParityScan scan;
    for (size_t i = 0; i + 1 < xs.size(); i++) {
        scan.cuts.push_back((xs[i] + xs[i + 1]) / 2);
    }
    scan.all_equal_one = !scan.cuts.empty();
    for (double c : scan.cuts) {
        int diff = crossing_parity(strip, strip.path_dimers, c) ^
                   crossing_parity(strip, strip.trivial_dimers, c);
        scan.differences.push_back(diff);
        if (diff != 1) scan.all_equal_one = false;
    }
    return scan;
}

}  // namespace autolab::fermion
