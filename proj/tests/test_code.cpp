#include <doctest.h>

#include "autolab/code.hpp"
#include "autolab/rng.hpp"

using namespace autolab;

TEST_CASE("force-plus run reproduces the expected groups with plus signs") {
    EmCode code(3, 3, 7);
    for (int t = 0; t < 9; t++) {
        auto res = code.run_round(MeasurePolicy::ForcePlus);
        CHECK(res.measured_consistent);
        CHECK(code.isg_matches());
        for (int p = 0; p < code.lattice().num_plaquettes(); p++) {
            int s = code.ledger().s[static_cast<size_t>(p)];
            if (s != 0) CHECK(s == +1);
        }
        if (res.transfer_measured.applicable) {
            CHECK(res.transfer_measured.ok);
            CHECK(res.transfer_measured.lhs == +1);
        }
        if (res.transfer_prepared.applicable) {
            CHECK(res.transfer_prepared.ok);
            CHECK(res.transfer_prepared.lhs == +1);
        }
        if (t >= 2) {
            CHECK(code.tableau().rank() ==
                  static_cast<size_t>(code.lattice().num_edges() - 2));
        }
    }
}

TEST_CASE("random-policy runs match the ledger-signed groups") {
    for (uint64_t seed : {11ULL, 12ULL, 13ULL, 14ULL, 15ULL}) {
        EmCode code(3, 3, seed);
        for (int t = 0; t < 9; t++) {
            auto res = code.run_round(MeasurePolicy::Random);
            CHECK(res.measured_consistent);
            CHECK(code.isg_matches());
            if (res.transfer_measured.applicable) CHECK(res.transfer_measured.ok);
            if (res.transfer_prepared.applicable) CHECK(res.transfer_prepared.ok);
        }
        CHECK(code.tableau().rank() ==
              static_cast<size_t>(code.lattice().num_edges() - 2));
    }
}

TEST_CASE("works on an asymmetric torus") {
    EmCode code(2, 3, 5);
    for (int t = 0; t < 6; t++) {
        code.run_round(MeasurePolicy::Random);
        CHECK(code.isg_matches());
    }
    CHECK(code.tableau().rank() ==
          static_cast<size_t>(code.lattice().num_edges() - 2));
}

TEST_CASE("a corrupted ledger sign is detected at the next re-measurement") {
    EmCode code(3, 3, 99);
    for (int t = 0; t < 4; t++) code.run_round(MeasurePolicy::ForcePlus);
    // Flip the recorded sign of one plaquette of the class measured next.
    int next_class = 4 % 3;
    int victim = code.lattice().plaquettes_of_color(next_class)[0];
    code.mutable_ledger().s[static_cast<size_t>(victim)] *= -1;
    auto res = code.run_round(MeasurePolicy::ForcePlus);
    CHECK(!res.measured_consistent);
}

TEST_CASE("logical interchange over one and two periods") {
    for (uint64_t seed : {21ULL, 22ULL, 23ULL}) {
        for (int dir = 0; dir < 2; dir++) {
            EmCode code(3, 3, seed);
            for (int t = 0; t < 3; t++) code.run_round(MeasurePolicy::Random);

            auto electric = code.electric_loop(dir);
            auto res = code.tableau().measure(electric, MeasurePolicy::Random);
            CHECK(code.tableau().rank() ==
                  static_cast<size_t>(code.lattice().num_edges() - 1));

            for (int t = 0; t < 3; t++) code.run_round(MeasurePolicy::Random);
            // The dual-type loop on the same cycle is now deterministic...
            auto magnetic = code.magnetic_loop(dir);
            CHECK(code.tableau().deterministic_outcome(magnetic).has_value());
            // ... while the same-type loop is not.
            auto electric_again = code.electric_loop(dir);
            CHECK(!code.tableau().deterministic_outcome(electric_again).has_value());
            // And the dual loop on the other cycle stays random.
            auto magnetic_other = code.magnetic_loop(1 - dir);
            CHECK(!code.tableau().deterministic_outcome(magnetic_other).has_value());

            for (int t = 0; t < 3; t++) code.run_round(MeasurePolicy::Random);
            // Two periods restore the original type.
            auto electric_back = code.electric_loop(dir);
            CHECK(code.tableau().deterministic_outcome(electric_back).has_value());
            (void)res;
        }
    }
}

TEST_CASE("a contractible loop is deterministic with the enclosed sign") {
    EmCode code(3, 3, 31);
    for (int t = 0; t < 4; t++) code.run_round(MeasurePolicy::Random);
    // A face stabilizer is the smallest contractible loop: the product of
    // the three active edges around a just-measured plaquette.
    int r = 3 % 3;
    int p = code.lattice().plaquettes_of_color(r)[0];
    int out_type = (r + 2) % 3;
    PauliString loop(code.tableau().num_qubits());
    for (int e : code.lattice().plaquette(p).boundary_edges) {
        if (code.lattice().edge(e).type == out_type) {
            loop.set_letter(static_cast<size_t>(e), 'X');
        }
    }
    auto det = code.tableau().deterministic_outcome(loop);
    REQUIRE(det.has_value());
    CHECK(*det == code.ledger().s[static_cast<size_t>(p)]);
}

TEST_CASE("deterministic replay from the seed") {
    EmCode a(3, 3, 1234), b(3, 3, 1234);
    for (int t = 0; t < 5; t++) {
        auto ra = a.run_round(MeasurePolicy::Random);
        auto rb = b.run_round(MeasurePolicy::Random);
        REQUIRE(ra.records.size() == rb.records.size());
        for (size_t i = 0; i < ra.records.size(); i++) {
            CHECK(ra.records[i].r == rb.records[i].r);
            CHECK(ra.records[i].m == rb.records[i].m);
        }
    }
}
