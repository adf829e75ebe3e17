#include <doctest.h>

#include <Eigen/Dense>

#include "autolab/dense.hpp"
#include "autolab/pauli.hpp"
#include "autolab/rng.hpp"

using namespace autolab;

TEST_CASE("single-qubit algebra") {
    auto X = PauliString::from_string("X");
    auto Z = PauliString::from_string("Z");

    CHECK((X * X).str() == "+I");
    // X Z = -i Y.
    auto xz = X * Z;
    CHECK(xz.letter(0) == 'Y');
    CHECK(xz.phase() == 3);
    CHECK(!X.commutes_with(Z));
}

TEST_CASE("two-qubit products track signs") {
    auto xx = PauliString::from_string("XX");
    auto zz = PauliString::from_string("ZZ");
    auto prod = xx * zz;
    CHECK(prod.str() == "-YY");
    CHECK(xx.commutes_with(zz));
    CHECK(PauliString::from_string("X").commutes_with(
              PauliString::from_string("X")));
}

TEST_CASE("products agree with a dense matrix oracle") {
    Rng rng(7);
    for (int trial = 0; trial < 100; trial++) {
        int n = 1 + static_cast<int>(rng.next_u64() % 4);
        PauliString p(static_cast<size_t>(n)), q(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) {
            p.set_letter(static_cast<size_t>(i), "IXYZ"[rng.next_u64() % 4]);
            q.set_letter(static_cast<size_t>(i), "IXYZ"[rng.next_u64() % 4]);
        }
        auto prod = p * q;
        dense::Mat mp = dense::pauli_matrix(p) * dense::pauli_matrix(q);
        CHECK((mp - dense::pauli_matrix(prod)).cwiseAbs().maxCoeff() < 1e-12);

        // Commutation against the dense commutator.
        dense::Mat comm = dense::pauli_matrix(p) * dense::pauli_matrix(q) -
                          dense::pauli_matrix(q) * dense::pauli_matrix(p);
        bool zero = comm.cwiseAbs().maxCoeff() < 1e-12;
        CHECK(p.commutes_with(q) == zero);
    }
}

TEST_CASE("random 10-qubit commutation pairs agree with the dense oracle") {
    Rng rng(99);
    for (int trial = 0; trial < 100; trial++) {
        PauliString p(10), q(10);
        for (int i = 0; i < 10; i++) {
            p.set_letter(static_cast<size_t>(i), "IXYZ"[rng.next_u64() % 4]);
            q.set_letter(static_cast<size_t>(i), "IXYZ"[rng.next_u64() % 4]);
        }
        // Matrix-free: compare PQ|v> against QP|v> on a random state.
        dense::DenseState v(10);
        v.v.setZero();
        for (int k = 0; k < 8; k++) {
            v.v(static_cast<int64_t>(rng.next_u64() & 1023)) +=
                std::complex<double>(rng.next_double() - 0.5,
                                     rng.next_double() - 0.5);
        }
        dense::DenseState pq = v, qp = v;
        pq.apply_pauli(q);
        pq.apply_pauli(p);
        qp.apply_pauli(p);
        qp.apply_pauli(q);
        bool dense_commutes = (pq.v - qp.v).cwiseAbs().maxCoeff() < 1e-12;
        CHECK(p.commutes_with(q) == dense_commutes);
    }
}

TEST_CASE("string round trip and hermiticity") {
    auto p = PauliString::from_string("-IZZ");
    CHECK(p.str() == "-IZZ");
    CHECK(p.sign() == -1);
    CHECK(p.is_hermitian());

    auto y = PauliString::from_string("+YY");
    CHECK(y.sign() == +1);
    CHECK(y.y_count() == 2);
}
