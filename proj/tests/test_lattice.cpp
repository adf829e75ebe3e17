#include <doctest.h>

#include <set>

#include "autolab/lattice.hpp"

using namespace autolab;

TEST_CASE("hex torus counts") {
    for (auto [l1, l2] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 4}}) {
        HexTorus h(l1, l2);
        CHECK(h.num_vertices() == 6 * l1 * l2);
        CHECK(h.num_edges() == 9 * l1 * l2);
        CHECK(h.num_plaquettes() == 3 * l1 * l2);
        for (int c = 0; c < 3; c++) {
            CHECK(static_cast<int>(h.plaquettes_of_color(c).size()) == l1 * l2);
            CHECK(static_cast<int>(h.edges_of_type(c).size()) == 3 * l1 * l2);
        }
    }
    CHECK_THROWS(HexTorus(1, 3));
}

TEST_CASE("every vertex sees all three edge types") {
    HexTorus h(3, 3);
    std::vector<std::set<int>> types(static_cast<size_t>(h.num_vertices()));
    std::vector<int> degree(static_cast<size_t>(h.num_vertices()), 0);
    for (int e = 0; e < h.num_edges(); e++) {
        const auto& ed = h.edge(e);
        degree[static_cast<size_t>(ed.v0)]++;
        degree[static_cast<size_t>(ed.v1)]++;
        types[static_cast<size_t>(ed.v0)].insert(ed.type);
        types[static_cast<size_t>(ed.v1)].insert(ed.type);
    }
    for (int v = 0; v < h.num_vertices(); v++) {
        CHECK(degree[static_cast<size_t>(v)] == 3);
        CHECK(types[static_cast<size_t>(v)].size() == 3);
    }
}

TEST_CASE("plaquette boundaries alternate the two non-matching types") {
    HexTorus h(3, 3);
    for (int p = 0; p < h.num_plaquettes(); p++) {
        const auto& pl = h.plaquette(p);
        int r = pl.color;
        for (int k = 0; k < 6; k++) {
            int type = h.edge(pl.boundary_edges[static_cast<size_t>(k)]).type;
            int want = (k % 2 == 0) ? (r + 1) % 3 : (r + 2) % 3;
            CHECK(type == want);
        }
        // Boundary edge k joins boundary vertices k and k+1.
        for (int k = 0; k < 6; k++) {
            const auto& ed = h.edge(pl.boundary_edges[static_cast<size_t>(k)]);
            std::set<int> got = {ed.v0, ed.v1};
            std::set<int> want = {pl.boundary_vertices[static_cast<size_t>(k)],
                                  pl.boundary_vertices[static_cast<size_t>((k + 1) % 6)]};
            CHECK(got == want);
        }
    }
}

TEST_CASE("terminating edges carry the plaquette's own type") {
    HexTorus h(3, 3);
    std::vector<int> termination_count(static_cast<size_t>(h.num_edges()), 0);
    for (int p = 0; p < h.num_plaquettes(); p++) {
        const auto& pl = h.plaquette(p);
        std::set<int> distinct;
        for (int te : pl.terminating_edges) {
            distinct.insert(te);
            termination_count[static_cast<size_t>(te)]++;
            CHECK(h.edge(te).type == pl.color);
            // The edge's recorded end-plaquettes include p.
            const auto& ed = h.edge(te);
            CHECK((ed.ends[0] == p || ed.ends[1] == p));
        }
        CHECK(distinct.size() == 6);
    }
    // Each edge terminates on exactly two plaquettes of its own type.
    for (int e = 0; e < h.num_edges(); e++) {
        CHECK(termination_count[static_cast<size_t>(e)] == 2);
        const auto& ed = h.edge(e);
        CHECK(h.plaquette_color(ed.ends[0]) == ed.type);
        CHECK(h.plaquette_color(ed.ends[1]) == ed.type);
        CHECK(ed.ends[0] != ed.ends[1]);
        // Side plaquettes carry the two other colors.
        std::set<int> side_colors = {h.plaquette_color(ed.side[0]),
                                     h.plaquette_color(ed.side[1])};
        CHECK(side_colors.count(ed.type) == 0);
        CHECK(side_colors.size() == 2);
    }
}

TEST_CASE("superlattices are triangular and host two independent loops") {
    HexTorus h(3, 3);
    for (int c = 0; c < 3; c++) {
        SuperLattice sl(h, c);
        CHECK(sl.num_vertices() == 9);
        CHECK(sl.edges().size() == 27u);
        // Degree 6 at every supervertex.
        std::vector<int> deg(static_cast<size_t>(sl.num_vertices()), 0);
        for (const auto& e : sl.edges()) {
            deg[static_cast<size_t>(e.sv0)]++;
            deg[static_cast<size_t>(e.sv1)]++;
        }
        for (int d : deg) CHECK(d == 6);

        auto loop0 = sl.loop_edges(0);
        auto loop1 = sl.loop_edges(1);
        CHECK(loop0.size() == 3u);
        CHECK(loop1.size() == 3u);
        CHECK(loop0 != loop1);
    }
}

TEST_CASE("triangular torus coloring") {
    CHECK_THROWS(TriTorus(4));
    TriTorus t(3);
    CHECK(t.num_vertices() == 9);
    for (int c = 0; c < 3; c++) {
        CHECK(t.up_triangles_of_color(c).size() == 3u);
    }
    // All three colors meet at every corner.
    for (int v = 0; v < t.num_vertices(); v++) {
        std::set<int> colors;
        for (int c = 0; c < 3; c++) {
            int base = t.up_triangle_containing(v, c);
            CHECK(t.vertex_color(base) == c);
            const auto& tri = t.up_triangles()[static_cast<size_t>(base)];
            bool member = tri.corners[0] == v || tri.corners[1] == v ||
                          tri.corners[2] == v;
            CHECK(member);
            colors.insert(c);
        }
        CHECK(colors.size() == 3);
    }
}

TEST_CASE("json dump is well formed") {
    HexTorus h(2, 2);
    auto doc = h.to_json();
    CHECK(doc.find("\"edges\"") != std::string::npos);
    CHECK(doc.find("\"plaquettes\"") != std::string::npos);
}
