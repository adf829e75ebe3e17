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

#include "autolab/lattice.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace autolab {

namespace {

// Neighbor directions of the hexagon-center lattice, counterclockwise.
// Color changes by +1, -1, +1, -1, +1, -1 along d0..d5.
constexpr int kDir[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

// A center (m, n) has color (m - n) mod 3 and decomposes uniquely as
// i*(1,1) + j*(-1,2) + c*(1,0); (i mod L1, j mod L2, c) is the torus key.
int HexTorus::center_id(int m, int n) const {
    int c = mod(m - n, 3);
    int j = (n - m + c) / 3;
    int i = m + j - c;
    return (mod(i, l1_) * l2_ + mod(j, l2_)) * 3 + c;
}

int HexTorus::triangle_vertex(int m, int n, bool up) const {
    return center_id(m, n) * 2 + (up ? 0 : 1);
}

int HexTorus::plaquette_id(int i, int j, int c) const {
    return (mod(i, l1_) * l2_ + mod(j, l2_)) * 3 + c;
}

void HexTorus::plaquette_cell(int p, int* i, int* j, int* c) const {
    *c = p % 3;
    *j = (p / 3) % l2_;
    *i = p / (3 * l2_);
}

HexTorus::HexTorus(int l1, int l2) : l1_(l1), l2_(l2) {
    if (l1 < 2 || l2 < 2) {
        throw std::invalid_argument("HexTorus: need L1 >= 2 and L2 >= 2");
    }
    int num_centers = 3 * l1 * l2;
    vertex_count_ = static_cast<size_t>(2 * num_centers);
    edges_.resize(static_cast<size_t>(3 * num_centers));
    plaquettes_.resize(static_cast<size_t>(num_centers));
    vertex_pos_.resize(vertex_count_);

    auto edge_id_of_pair = [&](int m, int n, int k) {
        // Pair (center, center + d_k); canonical owner uses k in {0,1,2}.
        if (k < 3) return center_id(m, n) * 3 + k;
        return center_id(m + kDir[k][0], n + kDir[k][1]) * 3 + (k - 3);
    };

    for (int i = 0; i < l1; i++) {
        for (int j = 0; j < l2; j++) {
            for (int c = 0; c < 3; c++) {
                // Canonical (m, n) for this center.
                int m = i - j + c;
                int n = i + 2 * j;
                int id = center_id(m, n);

                // Edges owned by this center: pairs (gamma, gamma + d_k),
                // k = 0..2. Types follow the color alternation.
                const int type_of_k[3] = {mod(c + 2, 3), mod(c + 1, 3),
                                          mod(c + 2, 3)};
                const int pair_verts[3][2][3] = {
                    // {v0 = (dm, dn, up), v1 = (dm, dn, up)}
                    {{0, 0, 1}, {0, -1, 0}},   // d0: up(g), down(g-d1)
                    {{0, 0, 1}, {-1, 0, 0}},   // d1: up(g), down(g-d0)
                    {{-1, 0, 1}, {-1, 0, 0}},  // d2: up(g-d0), down(g-d0)
                };
                const int pair_ends[3][2][2] = {
                    {{0, 1}, {1, -1}},   // d0: g+d1, g+d0-d1
                    {{1, 0}, {-1, 1}},   // d1: g+d0, g+d2
                    {{0, 1}, {-1, 0}},   // d2: g+d1, g-d0
                };
                for (int k = 0; k < 3; k++) {
                    Edge& e = edges_[static_cast<size_t>(id * 3 + k)];
                    e.type = type_of_k[k];
                    e.v0 = triangle_vertex(m + pair_verts[k][0][0],
                                           n + pair_verts[k][0][1],
                                           pair_verts[k][0][2] != 0);
                    e.v1 = triangle_vertex(m + pair_verts[k][1][0],
                                           n + pair_verts[k][1][1],
                                           pair_verts[k][1][2] != 0);
                    e.side = {id, center_id(m + kDir[k][0], n + kDir[k][1])};
                    e.ends = {center_id(m + pair_ends[k][0][0],
                                        n + pair_ends[k][0][1]),
                              center_id(m + pair_ends[k][1][0],
                                        n + pair_ends[k][1][1])};
                }

                // Hexagon around this center.
                Plaquette& p = plaquettes_[static_cast<size_t>(id)];
                p.color = c;
                const int bverts[6][3] = {
                    {0, 0, 1},    // up(g)
                    {-1, 0, 0},   // down(g-d0)
                    {-1, 0, 1},   // up(g-d0)
                    {-1, -1, 0},  // down(g-d0-d1)
                    {0, -1, 1},   // up(g-d1)
                    {0, -1, 0},   // down(g-d1)
                };
                for (int k = 0; k < 6; k++) {
                    p.boundary_vertices[k] = triangle_vertex(
                        m + bverts[k][0], n + bverts[k][1], bverts[k][2] != 0);
                    // Edge joining boundary vertices k and k+1 is the pair
                    // (gamma, gamma + d_{k+1}).
                    int kk = (k + 1) % 6;
                    p.boundary_edges[k] = edge_id_of_pair(m, n, kk);
                    // Terminating edge meeting the hexagon at vertex k is
                    // the pair (gamma + d_k, gamma + d_{k+1}); the step
                    // d_{k+1} - d_k equals d_{k+2}.
                    p.terminating_edges[k] = edge_id_of_pair(
                        m + kDir[k][0], n + kDir[k][1], (k + 2) % 6);
                }

                // Embedding (canonical representative, used for dumps).
                auto center_pos = [](int mm, int nn) {
                    return std::array<double, 2>{mm + 0.5 * nn,
                                                 nn * std::sqrt(3.0) / 2.0};
                };
                auto centroid = [&](std::array<std::array<int, 2>, 3> cs) {
                    double x = 0, y = 0;
                    for (const auto& mn : cs) {
                        auto pos = center_pos(mn[0], mn[1]);
                        x += pos[0] / 3;
                        y += pos[1] / 3;
                    }
                    return std::array<double, 2>{x, y};
                };
                vertex_pos_[static_cast<size_t>(triangle_vertex(m, n, true))] =
                    centroid({{{m, n}, {m + 1, n}, {m, n + 1}}});
                vertex_pos_[static_cast<size_t>(triangle_vertex(m, n, false))] =
                    centroid({{{m + 1, n}, {m, n + 1}, {m + 1, n + 1}}});
            }
        }
    }
}

std::vector<int> HexTorus::plaquettes_of_color(int c) const {
    std::vector<int> out;
    for (int p = 0; p < num_plaquettes(); p++) {
        if (plaquettes_[static_cast<size_t>(p)].color == c) out.push_back(p);
    }
    return out;
}

std::vector<int> HexTorus::edges_of_type(int t) const {
    std::vector<int> out;
    for (int e = 0; e < num_edges(); e++) {
        if (edges_[static_cast<size_t>(e)].type == t) out.push_back(e);
    }
    return out;
}

std::array<double, 2> HexTorus::vertex_pos(int v) const {
    return vertex_pos_[static_cast<size_t>(v)];
}

std::array<double, 2> HexTorus::edge_midpoint(int e) const {
    auto a = vertex_pos(edges_[static_cast<size_t>(e)].v0);
    auto b = vertex_pos(edges_[static_cast<size_t>(e)].v1);
    return {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
}

std::string HexTorus::to_json() const {
    nlohmann::json doc;
    doc["l1"] = l1_;
    doc["l2"] = l2_;
    doc["num_vertices"] = num_vertices();
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (int e = 0; e < num_edges(); e++) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        edges.push_back({{"id", e},
                         {"type", ed.type},
                         {"vertices", {ed.v0, ed.v1}},
                         {"side_plaquettes", {ed.side[0], ed.side[1]}},
                         {"end_plaquettes", {ed.ends[0], ed.ends[1]}}});
    }
    auto& plaqs = doc["plaquettes"] = nlohmann::json::array();
    for (int p = 0; p < num_plaquettes(); p++) {
        const Plaquette& pl = plaquettes_[static_cast<size_t>(p)];
        plaqs.push_back(
            {{"id", p},
             {"color", pl.color},
             {"boundary_vertices", pl.boundary_vertices},
             {"boundary_edges", pl.boundary_edges},
             {"terminating_edges", pl.terminating_edges}});
    }
    return doc.dump(2);
}

TriTorus::TriTorus(int l) : l_(l) {
    if (l < 3 || l % 3 != 0) {
        throw std::invalid_argument("TriTorus: L must be a multiple of 3");
    }
    up_.resize(static_cast<size_t>(l * l));
    containing_.resize(static_cast<size_t>(l * l));
    for (int m = 0; m < l; m++) {
        for (int n = 0; n < l; n++) {
            int v = vertex_id(m, n);
            Triangle& t = up_[static_cast<size_t>(v)];
            t.color = mod(m - n, 3);
            t.corners = {v, vertex_id(m + 1, n), vertex_id(m, n + 1)};
        }
    }
    for (int m = 0; m < l; m++) {
        for (int n = 0; n < l; n++) {
            int v = vertex_id(m, n);
            int c = mod(m - n, 3);
            // v is the base of its own-color triangle, the +e1 corner of
            // the (c-1)-triangle at v-e1 and the +e2 corner at v-e2.
            containing_[static_cast<size_t>(v)][static_cast<size_t>(c)] = v;
            containing_[static_cast<size_t>(v)][static_cast<size_t>(mod(c - 1, 3))] =
                vertex_id(m - 1, n);
            containing_[static_cast<size_t>(v)][static_cast<size_t>(mod(c + 1, 3))] =
                vertex_id(m, n - 1);
        }
    }
}

int TriTorus::vertex_id(int m, int n) const {
    return mod(m, l_) * l_ + mod(n, l_);
}

void TriTorus::vertex_coords(int v, int* m, int* n) const {
    *m = v / l_;
    *n = v % l_;
}

int TriTorus::vertex_color(int v) const {
    return up_[static_cast<size_t>(v)].color;
}

std::vector<int> TriTorus::up_triangles_of_color(int c) const {
    std::vector<int> out;
    for (int v = 0; v < num_vertices(); v++) {
        if (up_[static_cast<size_t>(v)].color == c) out.push_back(v);
    }
    return out;
}

std::array<int, 3> TriTorus::down_triangle(int m, int n) const {
    return {vertex_id(m + 1, n), vertex_id(m, n + 1), vertex_id(m + 1, n + 1)};
}

int TriTorus::up_triangle_containing(int v, int c) const {
    return containing_[static_cast<size_t>(v)][static_cast<size_t>(c)];
}

SuperLattice::SuperLattice(const HexTorus& base, int anchor_color)
    : base_(&base), color_(anchor_color) {
    if (anchor_color < 0 || anchor_color > 2) {
        throw std::invalid_argument("SuperLattice: color must be 0, 1 or 2");
    }
    verts_ = base.plaquettes_of_color(anchor_color);
    vert_index_.assign(static_cast<size_t>(base.num_plaquettes()), -1);
    for (size_t i = 0; i < verts_.size(); i++) {
        vert_index_[static_cast<size_t>(verts_[i])] = static_cast<int>(i);
    }
    for (int e : base.edges_of_type(anchor_color)) {
        const HexTorus::Edge& ed = base.edge(e);
        edges_.push_back({e, vert_index_[static_cast<size_t>(ed.ends[0])],
                          vert_index_[static_cast<size_t>(ed.ends[1])]});
    }
}

std::vector<int> SuperLattice::loop_edges(int dir) const {
    // Walk cell (0,0) -> (1,0) -> ... (dir 0) or (0,0) -> (0,1) -> ...
    // using the superedge joining consecutive cells.
    std::map<std::pair<int, int>, int> by_cells;
    for (size_t k = 0; k < edges_.size(); k++) {
        int pa = verts_[static_cast<size_t>(edges_[k].sv0)];
        int pb = verts_[static_cast<size_t>(edges_[k].sv1)];
        by_cells[{pa, pb}] = static_cast<int>(k);
        by_cells[{pb, pa}] = static_cast<int>(k);
    }
    int steps = dir == 0 ? base_->l1() : base_->l2();
    std::vector<int> out;
    for (int s = 0; s < steps; s++) {
        int i0 = dir == 0 ? s : 0;
        int j0 = dir == 0 ? 0 : s;
        int i1 = dir == 0 ? s + 1 : 0;
        int j1 = dir == 0 ? 0 : s + 1;
        int pa = base_->plaquette_id(i0, j0, color_);
        int pb = base_->plaquette_id(i1, j1, color_);
        auto it = by_cells.find({pa, pb});
        if (it == by_cells.end()) {
            throw std::logic_error("superlattice loop step missing");
        }
        out.push_back(edges_[static_cast<size_t>(it->second)].hex_edge);
    }
    return out;
}

}  // namespace autolab
