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

#ifndef AUTOLAB_DENSE_HPP
#define AUTOLAB_DENSE_HPP

#include <Eigen/Dense>
#include <complex>

#include "autolab/pauli.hpp"

namespace autolab::dense {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr int kMaxStateQubits = 14;
inline constexpr int kMaxOperatorQubits = 10;

// Basis-state indexing: qubit q is bit q of the index (little-endian).
struct DenseState {
    explicit DenseState(int n);
    static DenseState computational(int n, uint64_t bits);

    int n;
    Vec v;

    void apply_h(int q);
    void apply_cz(int a, int b);
    void apply_pauli(const PauliString& p);

    double norm2() const { return v.squaredNorm(); }

    // Probability of outcome +1 for Hermitian Pauli p.
    double prob_plus(const PauliString& p) const;

    // Project onto the (outcome * p = +1) eigenspace without renormalizing.
    // Returns the squared norm left after projection.
    double project(const PauliString& p, int outcome);

    std::complex<double> expectation(const PauliString& p) const;
};

// 2^n x 2^n matrix of a signed Pauli string.
Mat pauli_matrix(const PauliString& p);

// Operator 2-norm (largest singular value).
double op_norm(const Mat& m);

// Ground-space dimension of a Hermitian matrix: eigenvalues within tol of
// the minimum.
int ground_space_dim(const Mat& h, double tol);

}  // namespace autolab::dense

#endif
