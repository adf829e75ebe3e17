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

#ifndef AUTOLAB_FERMION_HPP
#define AUTOLAB_FERMION_HPP

#include <array>
#include <vector>

namespace autolab::fermion {

// Positive couplings normalized to J_x + J_y + J_z = 1.
struct CouplingVector {
    double jx, jy, jz;

    CouplingVector(double x, double y, double z);
    static CouplingVector normalized(double x, double y, double z);
    double component(int type) const;
};

// Closed-form spectral gap 2 sqrt(Jx^2 + Jy^2 + Jz^2 - JxJy - JyJz - JzJx).
double gap_formula(const CouplingVector& j);

// Many-body gap from Bloch diagonalization of the free-Majorana model in
// the vortex-free sector (6 Majorana bands per cell). The momentum grid is
// grid_n x grid_n plus the zone center, where the Dirac points of the
// uniform model fold.
double kekule_bloch_gap(const CouplingVector& j, int grid_n);

// Couplings along the winding path J(theta) at distortion strength lambda.
CouplingVector coupling_path(double theta, double lambda);

// Many-body gap of the m-site Majorana ring at interpolation parameter
// t in [0, 3]; a vortex flips the sign of one bond.
double ring_gap(int sites, double t, bool vortex);
double ring_min_gap(int sites, bool vortex, int samples = 301);

// Spectrum of the unrolled defect Hamiltonian on an open disc of radius
// `radial_cells` plaquette spacings.
struct DefectSpectrum {
    std::vector<double> energies;  // ascending many-body mode energies
    double bulk_gap = 0;           // gap_formula at the given lambda
    double origin_weight = 0;      // lowest-mode weight within r < R/3
    int num_modes = 0;
};
DefectSpectrum defect_spectrum(int radial_cells, double lambda,
                               int keep_modes = 8);

// Unrolled dimer configurations of the period-3 schedule: bands of type-0,
// type-1, type-2 and again type-0 dimers stacked top to bottom, compared
// against the all-type-0 configuration by counting dimers crossing a
// vertical line.
struct UnrolledStrip {
    int width_cells = 0;  // horizontal period (multiple of 3)
    std::vector<std::array<double, 2>> pos;          // vertex embedding
    std::vector<std::array<int, 2>> path_dimers;     // the unrolled path
    std::vector<std::array<int, 2>> trivial_dimers;  // all type-0
    double period_x = 0;
};
UnrolledStrip build_unrolled_strip(int width_cells = 6, int band_rows = 3);

// Number of dimers crossing the vertical line x = cut_x, mod 2.
int crossing_parity(const UnrolledStrip& strip,
                    const std::vector<std::array<int, 2>>& dimers, double cut_x);

struct ParityScan {
    std::vector<double> cuts;
    std::vector<int> differences;  // path parity xor trivial parity per cut
    bool all_equal_one = false;
};
ParityScan parity_difference_scan(const UnrolledStrip& strip);

}  // namespace autolab::fermion

#endif
