#include <doctest.h>

#include <vector>

#include "autolab/kw.hpp"
#include "autolab/rng.hpp"
#include "autolab/tableau.hpp"

using namespace autolab;

namespace {

kw::PlaquetteIO standalone_ring() {
    kw::PlaquetteIO io;
    io.plaquette = 0;
    io.ring = {0, 1, 2, 3, 4, 5};
    return io;
}

PauliString x_at(size_t n, int q) {
    return PauliString::single(n, static_cast<size_t>(q), 'X');
}

// Subgroup of a stabilizer group supported on the first `keep` qubits.
std::vector<PauliString> restrict_group(const std::vector<PauliString>& gens,
                                        size_t total, size_t keep) {
    // Move the qubits to drop to the front so their pivots come first.
    size_t drop = total - keep;
    auto permute = [&](const PauliString& p) {
        PauliString out(total);
        out.set_phase_xz(p.phase_xz());
        for (size_t q = 0; q < total; q++) {
            size_t dst = q < keep ? drop + q : q - keep;
            out.set_x(dst, p.x_bit(q));
            out.set_z(dst, p.z_bit(q));
        }
        return out;
    };
    std::vector<PauliString> moved;
    for (const auto& g : gens) moved.push_back(permute(g));
    auto rref = StabilizerTableau::canonical_form(moved);
    std::vector<PauliString> out;
    for (const auto& row : rref) {
        bool clean = true;
        for (size_t q = 0; q < drop; q++) {
            if (row.x_bit(q) || row.z_bit(q)) clean = false;
        }
        if (!clean) continue;
        PauliString small(keep);
        small.set_phase_xz(row.phase_xz());
        for (size_t q = 0; q < keep; q++) {
            small.set_x(q, row.x_bit(drop + q));
            small.set_z(q, row.z_bit(drop + q));
        }
        out.push_back(small);
    }
    return out;
}

}  // namespace

TEST_CASE("matrix element formula substitutions") {
    kw::KWRecord rec(3);
    CHECK(kw::matrix_element({0, 0, 0}, {0, 0, 0}, rec) == +1);
    CHECK(kw::matrix_element({0, 0, 0}, {1, 0, 0}, rec) == +1);
    CHECK(rec.measured_sign() == +1);
    CHECK(rec.prepared_sign() == +1);

    // m_2 = 1 flips the measured sign only.
    kw::KWRecord rec2(3);
    rec2.m[1] = 1;
    CHECK(rec2.measured_sign() == -1);
    CHECK(rec2.prepared_sign() == +1);

    // Flipping any r at an odd position flips the prepared sign only.
    for (int pos : {1, 3, 5}) {
        kw::KWRecord rec3(3);
        rec3.r[static_cast<size_t>(pos - 1)] = 1;
        CHECK(rec3.prepared_sign() == -1);
        CHECK(rec3.measured_sign() == +1);
    }
}

TEST_CASE("dense channel equals the matrix-element formula on all patterns") {
    auto res = kw::verify_matrix_elements(1e-10);
    CHECK(res.pass);
    CHECK(res.patterns_checked == 4096);

    auto bad = kw::verify_matrix_elements(1e-10, /*inject_sign_error=*/true);
    CHECK(!bad.pass);
}

TEST_CASE("channel contract on the tableau realization") {
    // 200 seeded runs over the four contract clauses.
    Rng master(7777);
    auto io = standalone_ring();
    for (int run = 0; run < 200; run++) {
        uint64_t seed = master.next_u64();
        StabilizerTableau t(6, seed);

        // Random input data on the incoming qubits.
        Rng prep(seed ^ 0x1234);
        for (int k = 0; k < 3; k++) {
            PauliString p(6);
            for (int q : {0, 2, 4}) {
                p.set_letter(static_cast<size_t>(q), "IXYZ"[prep.next_u64() % 4]);
            }
            if (p.is_identity_bits()) continue;
            t.measure(p, MeasurePolicy::Random);
        }

        // Incoming values of the operators the contract transports.
        PauliString x_odd_prod(6);
        for (int q : {0, 2, 4}) x_odd_prod.set_letter(static_cast<size_t>(q), 'X');
        auto before_prod = t.deterministic_outcome(x_odd_prod);
        std::vector<std::optional<int>> before_x(3), before_zz(3);
        for (int j = 0; j < 3; j++) {
            // X at ring position 2j+1 (qubit 2j).
            before_x[static_cast<size_t>(j)] =
                t.deterministic_outcome(x_at(6, 2 * j));
            // Z at ring positions 2j-1 and 2j+1 around even position 2j:
            // qubits 2j-2 mod 6 and 2j.
            PauliString zz(6);
            zz.set_letter(static_cast<size_t>((2 * j + 4) % 6), 'Z');
            zz.set_letter(static_cast<size_t>(2 * j), 'Z');
            before_zz[static_cast<size_t>(j)] = t.deterministic_outcome(zz);
        }

        auto rec = kw::apply_reference(t, io, MeasurePolicy::Random);

        // The channel measured X_1 X_3 X_5 on the incoming state.
        if (before_prod.has_value()) {
            CHECK(rec.measured_sign() == *before_prod);
        }
        // It prepared X_2 X_4 X_6 with the prepared sign.
        PauliString x_even_prod(6);
        for (int q : {1, 3, 5}) x_even_prod.set_letter(static_cast<size_t>(q), 'X');
        auto got = t.deterministic_outcome(x_even_prod);
        REQUIRE(got.has_value());
        CHECK(*got == rec.prepared_sign());
        // Incoming qubits end decoupled in the X basis.
        for (int q : {0, 2, 4}) {
            CHECK(t.deterministic_outcome(x_at(6, q)).has_value());
        }
        // X_{2j+1} -> (-1)^{m_{2j}+r_{2j+2}} Z_{2j} Z_{2j+2}: ring position
        // p maps to qubit p-1, so the pair sits on qubits 2j-1 mod 6, 2j+1.
        for (int j = 0; j < 3; j++) {
            if (!before_x[static_cast<size_t>(j)].has_value()) continue;
            PauliString zz(6);
            zz.set_letter(static_cast<size_t>((2 * j + 5) % 6), 'Z');
            zz.set_letter(static_cast<size_t>(2 * j + 1), 'Z');
            auto after = t.deterministic_outcome(zz);
            REQUIRE(after.has_value());
            int mu = rec.mu(2 * j + 1);
            CHECK(*after == (mu ? -1 : +1) * (*before_x[static_cast<size_t>(j)]));
        }
        // Z_{2j-1} Z_{2j+1} -> (-1)^{m_{2j-1}+r_{2j+1}} X_{2j}.
        for (int j = 0; j < 3; j++) {
            if (!before_zz[static_cast<size_t>(j)].has_value()) continue;
            auto after = t.deterministic_outcome(x_at(6, (2 * j + 5) % 6));
            REQUIRE(after.has_value());
            int mu = rec.mu(2 * j);
            CHECK(*after ==
                  (mu ? -1 : +1) * (*before_zz[static_cast<size_t>(j)]));
        }
    }
}

TEST_CASE("force-plus gives the zero record and plus signs") {
    StabilizerTableau t(6, 5);
    auto io = standalone_ring();
    for (int q : {0, 2, 4}) {
        t.measure(x_at(6, q), MeasurePolicy::ForcePlus);
    }
    auto rec = kw::apply_reference(t, io, MeasurePolicy::ForcePlus);
    for (auto b : rec.r) CHECK(b == 0);
    for (auto b : rec.m) CHECK(b == 0);
    CHECK(rec.measured_sign() == +1);
    CHECK(rec.prepared_sign() == +1);

    auto doc = rec.to_json();
    CHECK(doc.find("\"r\"") != std::string::npos);
}

TEST_CASE("all-measurement compilation matches the reference per record") {
    Rng master(314159);
    auto io = standalone_ring();
    std::array<int, 6> anc = {6, 7, 8, 9, 10, 11};
    for (int run = 0; run < 60; run++) {
        uint64_t seed = master.next_u64();

        auto prep_input = [&](StabilizerTableau& t) {
            Rng prep(seed ^ 0xabcd);
            for (int k = 0; k < 3; k++) {
                PauliString p(12);
                for (int q : {0, 2, 4}) {
                    p.set_letter(static_cast<size_t>(q), "IXYZ"[prep.next_u64() % 4]);
                }
                int coin = prep.next_bit() ? -1 : +1;
                if (p.is_identity_bits()) continue;
                int outcome = t.deterministic_outcome(p).value_or(coin);
                t.measure_forced(p, outcome);
            }
        };

        StabilizerTableau ta(12, seed);
        prep_input(ta);
        auto rec = kw::apply_reference(ta, io, MeasurePolicy::Random);

        StabilizerTableau tb(12, seed ^ 1);
        prep_input(tb);
        auto rec2 = kw::apply_all_measurement_forced(tb, io, anc, rec);
        CHECK(rec2.r == rec.r);
        CHECK(rec2.m == rec.m);

        auto ga = restrict_group(ta.stabilizers(), 12, 6);
        auto gb = restrict_group(tb.stabilizers(), 12, 6);
        CHECK(StabilizerTableau::groups_equal(ga, gb));
    }
}

TEST_CASE("all-measurement compilation contract under its own randomness") {
    Rng master(2718);
    auto io = standalone_ring();
    std::array<int, 6> anc = {6, 7, 8, 9, 10, 11};
    for (int run = 0; run < 40; run++) {
        StabilizerTableau t(12, master.next_u64());
        PauliString x_odd_prod(12);
        for (int q : {0, 2, 4}) x_odd_prod.set_letter(static_cast<size_t>(q), 'X');
        t.measure_forced(x_odd_prod, run % 2 ? -1 : +1);
        auto rec = kw::apply_all_measurement(t, io, anc, MeasurePolicy::Random);
        CHECK(rec.measured_sign() == (run % 2 ? -1 : +1));
        PauliString x_even_prod(12);
        for (int q : {1, 3, 5}) x_even_prod.set_letter(static_cast<size_t>(q), 'X');
        auto got = t.deterministic_outcome(x_even_prod);
        REQUIRE(got.has_value());
        CHECK(*got == rec.prepared_sign());
    }
}
