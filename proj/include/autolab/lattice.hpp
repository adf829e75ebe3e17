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

#ifndef AUTOLAB_LATTICE_HPP
#define AUTOLAB_LATTICE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace autolab {

// Hexagonal torus with 3-colored plaquettes and typed edges.
//
// Built from the triangular lattice of hexagon centers. A center has cell
// coordinates (i, j) and a color c in {0,1,2}; every color class appears
// once per cell, so the torus is 3-colorable for all L1, L2 >= 2. Honeycomb
// vertices are the triangles of the center lattice, edges are adjacent
// center pairs, and the edge type is the color missing from that pair.
class HexTorus {
  public:
    HexTorus(int l1, int l2);

    struct Edge {
        int type;                  // 0, 1, 2
        int v0, v1;                // endpoint vertex ids
        std::array<int, 2> side;   // the two plaquettes it borders
        std::array<int, 2> ends;   // the two type-`type` plaquettes it ends in
    };
    struct Plaquette {
        int color;
        std::array<int, 6> boundary_vertices;  // counterclockwise
        std::array<int, 6> boundary_edges;     // boundary_edges[k] joins
                                               // vertices k and k+1
        std::array<int, 6> terminating_edges;  // terminating_edges[k] meets
                                               // the plaquette at vertex k
    };

    int l1() const { return l1_; }
    int l2() const { return l2_; }
    int num_vertices() const { return static_cast<int>(vertex_count_); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_plaquettes() const { return static_cast<int>(plaquettes_.size()); }

    const Edge& edge(int e) const { return edges_[e]; }
    const Plaquette& plaquette(int p) const { return plaquettes_[p]; }

    int plaquette_color(int p) const { return plaquettes_[p].color; }
    std::vector<int> plaquettes_of_color(int c) const;
    std::vector<int> edges_of_type(int t) const;

    // Plaquette id from cell coordinates and color.
    int plaquette_id(int i, int j, int c) const;
    // Cell coordinates and color of a plaquette.
    void plaquette_cell(int p, int* i, int* j, int* c) const;

    // Euclidean embedding (for reports and cut counting).
    std::array<double, 2> vertex_pos(int v) const;
    std::array<double, 2> edge_midpoint(int e) const;

    // JSON document with vertices, typed edges, colored plaquettes and the
    // incidence maps.
    std::string to_json() const;

  private:
    friend class SuperLattice;
    int center_id(int m, int n) const;   // reduce (m, n) to a torus center
    int triangle_vertex(int m, int n, bool up) const;

    int l1_, l2_;
    size_t vertex_count_;
    std::vector<Edge> edges_;
    std::vector<Plaquette> plaquettes_;
    std::vector<std::array<double, 2>> vertex_pos_;
};

// Triangular torus with qubits at the vertices and 3-colored upward
// triangles; all three colors meet at every corner.
class TriTorus {
  public:
    explicit TriTorus(int l);  // l must be a multiple of 3

    struct Triangle {
        int color;
        std::array<int, 3> corners;  // base, base+e1, base+e2
    };

    int l() const { return l_; }
    int num_vertices() const { return l_ * l_; }
    int vertex_id(int m, int n) const;
    void vertex_coords(int v, int* m, int* n) const;
    int vertex_color(int v) const;

    const std::vector<Triangle>& up_triangles() const { return up_; }
    std::vector<int> up_triangles_of_color(int c) const;
    // Downward triangle based at (m, n): {v+e1, v+e2, v+e1+e2}.
    std::array<int, 3> down_triangle(int m, int n) const;

    // The unique color-c upward triangle containing vertex v.
    int up_triangle_containing(int v, int c) const;

  private:
    int l_;
    std::vector<Triangle> up_;
    std::vector<std::array<int, 3>> containing_;  // per vertex, per color
};

// Triangular torus graph whose vertices are the type-r plaquettes of a
// HexTorus and whose edges are the type-r edges joining them.
class SuperLattice {
  public:
    SuperLattice(const HexTorus& base, int anchor_color);

    struct SEdge {
        int hex_edge;  // underlying hexagonal-lattice edge (the qubit)
        int sv0, sv1;  // supervertex endpoints (indices into plaquettes())
    };

    int anchor_color() const { return color_; }
    const std::vector<int>& plaquettes() const { return verts_; }
    const std::vector<SEdge>& edges() const { return edges_; }
    int num_vertices() const { return static_cast<int>(verts_.size()); }

    // Hex-edge ids of a homologically nontrivial loop winding around torus
    // direction dir (0 or 1): a closed walk on the superlattice.
    std::vector<int> loop_edges(int dir) const;

  private:
    const HexTorus* base_;
    int color_;
    std::vector<int> verts_;           // plaquette ids, index = supervertex
    std::vector<int> vert_index_;      // plaquette id -> supervertex index
    std::vector<SEdge> edges_;
};

}  // namespace autolab

#endif
