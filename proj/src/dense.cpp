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

#include "autolab/dense.hpp"

#include <stdexcept>

namespace autolab::dense {

namespace {

const cd kPhases[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};

void check_state_size(int n) {
    if (n < 1 || n > kMaxStateQubits) {
        throw std::invalid_argument("dense state exceeds the dense limit");
    }
}

}  // namespace

DenseState::DenseState(int n_) : n(n_) {
    check_state_size(n_);
    v = Vec::Zero(int64_t{1} << n_);
    v(0) = cd(1, 0);
}

DenseState DenseState::computational(int n, uint64_t bits) {
    DenseState s(n);
    s.v(0) = cd(0, 0);
    s.v(static_cast<int64_t>(bits)) = cd(1, 0);
    return s;
}

void DenseState::apply_h(int q) {
    const double r = 1.0 / std::sqrt(2.0);
    int64_t mask = int64_t{1} << q;
    for (int64_t i = 0; i < v.size(); i++) {
        if (i & mask) continue;
        cd a = v(i), b = v(i | mask);
        v(i) = r * (a + b);
        v(i | mask) = r * (a - b);
    }
}

void DenseState::apply_cz(int a, int b) {
    int64_t ma = int64_t{1} << a, mb = int64_t{1} << b;
    for (int64_t i = 0; i < v.size(); i++) {
        if ((i & ma) && (i & mb)) v(i) = -v(i);
    }
}

void DenseState::apply_pauli(const PauliString& p) {
    if (static_cast<int>(p.num_qubits()) != n) {
        throw std::invalid_argument("apply_pauli: size mismatch");
    }
    uint64_t xm = 0, zm = 0;
    for (int q = 0; q < n; q++) {
        if (p.x_bit(q)) xm |= uint64_t{1} << q;
        if (p.z_bit(q)) zm |= uint64_t{1} << q;
    }
    Vec out = Vec::Zero(v.size());
    cd ph = kPhases[p.phase_xz() & 3];
    for (int64_t i = 0; i < v.size(); i++) {
        // i^p X^x Z^z |i> = i^p (-1)^{|z & i|} |i ^ x>
        int zpar = __builtin_parityll(zm & static_cast<uint64_t>(i));
        out(static_cast<int64_t>(static_cast<uint64_t>(i) ^ xm)) =
            (zpar ? -ph : ph) * v(i);
    }
    v = std::move(out);
}

double DenseState::prob_plus(const PauliString& p) const {
    DenseState tmp = *this;
    tmp.apply_pauli(p);
    cd exp = v.dot(tmp.v);  // <v|P|v>
    return 0.5 * (1.0 + exp.real()) * (norm2() > 0 ? 1.0 : 0.0);
}

double DenseState::project(const PauliString& p, int outcome) {
    DenseState tmp = *this;
    tmp.apply_pauli(p);
    v = 0.5 * (v + static_cast<double>(outcome) * tmp.v);
    return norm2();
}

std::complex<double> DenseState::expectation(const PauliString& p) const {
    DenseState tmp = *this;
    tmp.apply_pauli(p);
    return v.dot(tmp.v) / norm2();
}

Mat pauli_matrix(const PauliString& p) {
    int n = static_cast<int>(p.num_qubits());
    if (n > kMaxOperatorQubits) {
        throw std::invalid_argument("dense operator exceeds the dense limit");
    }
    int64_t dim = int64_t{1} << n;
    uint64_t xm = 0, zm = 0;
    for (int q = 0; q < n; q++) {
        if (p.x_bit(q)) xm |= uint64_t{1} << q;
        if (p.z_bit(q)) zm |= uint64_t{1} << q;
    }
    cd ph = kPhases[p.phase_xz() & 3];
    Mat m = Mat::Zero(dim, dim);
    for (int64_t col = 0; col < dim; col++) {
        int zpar = __builtin_parityll(zm & static_cast<uint64_t>(col));
        m(static_cast<int64_t>(static_cast<uint64_t>(col) ^ xm), col) =
            zpar ? -ph : ph;
    }
    return m;
}

double op_norm(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m.adjoint() * m,
                                          Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

int ground_space_dim(const Mat& h, double tol) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    double e0 = ev.minCoeff();
    int dim = 0;
    for (int i = 0; i < ev.size(); i++) {
        if (ev(i) <= e0 + tol) dim++;
    }
    return dim;
}

}  // namespace autolab::dense
