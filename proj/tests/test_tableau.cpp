#include <doctest.h>

#include <sstream>

#include "autolab/dense.hpp"
#include "autolab/rng.hpp"
#include "autolab/tableau.hpp"

using namespace autolab;

namespace {

PauliString random_pauli(Rng& rng, size_t n, bool nontrivial = true) {
    PauliString p(n);
    do {
        for (size_t i = 0; i < n; i++) {
            p.set_letter(i, "IXYZ"[rng.next_u64() % 4]);
        }
    } while (nontrivial && p.is_identity_bits());
    if (rng.next_bit()) p.set_sign(-1);
    return p;
}

}  // namespace

TEST_CASE("deterministic and forced measurements") {
    auto t = StabilizerTableau::zero_state(1);
    auto res = t.measure(PauliString::from_string("Z"), MeasurePolicy::Random);
    CHECK(res.outcome == +1);
    CHECK(res.deterministic);

    // Measure Z on |+>: forced outcome, group becomes <Z>.
    StabilizerTableau tx(1, 3);
    tx.measure(PauliString::from_string("X"), MeasurePolicy::ForcePlus);
    auto res2 = tx.measure(PauliString::from_string("Z"), MeasurePolicy::ForcePlus);
    CHECK(res2.outcome == +1);
    CHECK(!res2.deterministic);
    CHECK(StabilizerTableau::groups_equal(
        tx.stabilizers(), {PauliString::from_string("Z")}));
}

TEST_CASE("measurement idempotence and monotone rank") {
    Rng seed(42);
    for (int trial = 0; trial < 20; trial++) {
        StabilizerTableau t(4, seed.next_u64());
        size_t last_rank = 0;
        for (int step = 0; step < 12; step++) {
            auto p = random_pauli(seed, 4);
            p.set_sign(+1);
            auto r1 = t.measure(p, MeasurePolicy::Random);
            auto r2 = t.measure(p, MeasurePolicy::Random);
            CHECK(r2.deterministic);
            CHECK(r1.outcome == r2.outcome);
            CHECK(t.rank() >= last_rank);
            last_rank = t.rank();
        }
    }
}

TEST_CASE("canonical forms") {
    auto g1 = {PauliString::from_string("ZZ"), PauliString::from_string("ZI")};
    auto g2 = {PauliString::from_string("IZ"), PauliString::from_string("ZI")};
    CHECK(StabilizerTableau::groups_equal(g1, g2));

    CHECK(!StabilizerTableau::groups_equal({PauliString::from_string("-Z")},
                                           {PauliString::from_string("Z")}));

    // XX * ZZ = -YY, so these generate the same signed group.
    CHECK(StabilizerTableau::groups_equal(
        {PauliString::from_string("XX"), PauliString::from_string("ZZ")},
        {PauliString::from_string("XX"), PauliString::from_string("-YY")}));

    // Dependent generators collapse.
    std::vector<PauliString> dep = {PauliString::from_string("ZII"),
                                    PauliString::from_string("IZI"),
                                    PauliString::from_string("ZZI")};
    CHECK(StabilizerTableau::canonical_form(dep).size() == 2);
    CHECK(StabilizerTableau::gf2_rank(dep) == 2);

    // Canonicalization is idempotent.
    auto once = StabilizerTableau::canonical_form(dep);
    auto twice = StabilizerTableau::canonical_form(once);
    CHECK(once.size() == twice.size());
    for (size_t i = 0; i < once.size(); i++) CHECK(once[i] == twice[i]);

    // Inconsistent set (-I in the group) is rejected.
    std::vector<PauliString> bad = {PauliString::from_string("Z"),
                                    PauliString::from_string("-Z")};
    CHECK_THROWS(StabilizerTableau::canonical_form(bad));
}

TEST_CASE("pure-state measurements match the dense statevector oracle") {
    Rng seed(2026);
    for (int trial = 0; trial < 30; trial++) {
        int n = 2 + static_cast<int>(seed.next_u64() % 4);  // up to 5 qubits
        auto t = StabilizerTableau::zero_state(static_cast<size_t>(n),
                                               seed.next_u64());
        dense::DenseState psi(n);
        for (int step = 0; step < 10; step++) {
            auto p = random_pauli(seed, static_cast<size_t>(n));
            double prob_plus = psi.prob_plus(p);
            auto res = t.measure(p, MeasurePolicy::Random);
            if (res.deterministic) {
                CHECK(std::abs(prob_plus - (res.outcome == 1 ? 1.0 : 0.0)) < 1e-9);
            } else {
                CHECK(std::abs(prob_plus - 0.5) < 1e-9);
            }
            double left = psi.project(p, res.outcome);
            CHECK(left > 1e-12);
            psi.v /= std::sqrt(left);
            // The dense state must be stabilized by every tableau row.
            for (const auto& s : t.stabilizers()) {
                auto e = psi.expectation(s);
                CHECK(std::abs(e.real() - 1.0) < 1e-9);
            }
        }
        CHECK(t.rank() == static_cast<size_t>(n));
    }
}

TEST_CASE("mixed-state measurements match a purified dense oracle") {
    // System qubits 0..2 purified against ancillas 3..5.
    Rng seed(11);
    for (int trial = 0; trial < 15; trial++) {
        StabilizerTableau t(3, seed.next_u64());
        dense::DenseState psi(6);
        for (int q = 0; q < 3; q++) {
            psi.apply_h(q);
            // CNOT q -> q+3 via H and CZ.
            psi.apply_h(q + 3);
            psi.apply_cz(q, q + 3);
            psi.apply_h(q + 3);
        }
        for (int step = 0; step < 8; step++) {
            auto p3 = random_pauli(seed, 3);
            PauliString p6(6);
            for (size_t q = 0; q < 3; q++) {
                p6.set_letter(q, p3.letter(q));
            }
            p6.set_sign(p3.sign());
            double prob_plus = psi.prob_plus(p6);
            auto res = t.measure(p3, MeasurePolicy::Random);
            if (res.deterministic) {
                CHECK(std::abs(prob_plus - (res.outcome == 1 ? 1.0 : 0.0)) < 1e-9);
            } else {
                CHECK(std::abs(prob_plus - 0.5) < 1e-9);
            }
            double left = psi.project(p6, res.outcome);
            psi.v /= std::sqrt(left);
        }
    }
}

TEST_CASE("serialization uses sign-prefixed rows") {
    auto t = StabilizerTableau::zero_state(3);
    std::ostringstream out;
    t.serialize(out);
    CHECK(out.str() == "+ZII\n+IZI\n+IIZ\n");
}
