// Copyright 2026 The etsc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "etsc/quantum_state.hpp"

namespace etsc {

inline constexpr int kMaxBisectionIterations = 200;
inline constexpr double kDefaultEntropyTol = 1e-9;

// One-parameter family of unitaries U(t) = sum_s exp(i t theta_s) |a_s><a_s|
// interpolating the identity (t = 0) to the transition unitary W (t = 1)
// along W's eigenphases.
struct UnitaryPath {
  OrthonormalBasis phase_axes;  // eigenvectors of W, ambient coordinates
  RealVector phases;            // theta_s in [0, 2*pi)
  OrthonormalBasis base_basis;  // basis the path acts on
};

// Outcome of the rotated-basis entropy search.
struct BasisSearchResult {
  OrthonormalBasis basis;
  double parameter;         // t* in [0, 1]
  double achieved_entropy;  // bits
  int iterations;
};

// The fixed d x d coefficient matrix with entries
// exp(i*2*pi*k*l/d)/sqrt(d), k, l = 1..d. Complex symmetric, unitary, and a
// fourth root of the identity (its square is the index-reversal permutation).
ComplexMatrix fourier_coefficients(int d);

// Rotates b0 into the discrete-Fourier superposition basis: every output
// state has overlap magnitude 1/sqrt(d) with every input state.
OrthonormalBasis fourier_basis(const OrthonormalBasis& b0);

// W = sum_i |e_i^1><e_i^0|, the unitary carrying b0 onto b1.
ComplexMatrix transition_unitary(const OrthonormalBasis& b0, const OrthonormalBasis& b1);

// Builds the eigenphase path for rho: base basis = eigenbasis of rho, target
// basis = its Fourier rotation. W^4 = I exactly, so the eigenstructure is
// obtained from polynomial spectral projectors at phases {0, pi/2, pi, 3pi/2}.
UnitaryPath build_path(const DensityMatrix& rho);

// U(t) for t in [0, 1].
ComplexMatrix path_unitary(const UnitaryPath& path, double t);

// The rotated basis U(t) * base_basis.
OrthonormalBasis basis_at(const UnitaryPath& path, double t);

// S(t) = entropy of rho dephased in the basis U(t) * base_basis, in bits.
// S(0) = S(rho), S(1) = log2(d).
double entropy_along_path(const DensityMatrix& rho, const UnitaryPath& path, double t);

// The dephased diagonal evaluated through the explicit interference formula
// p_i = sum_k p_k |sum_s exp(i t theta_s) <e_k^0|a_s><a_s|e_i^0>|^2,
// an independent route to measurement_diagonal(rho, basis_at(path, t)).
Distribution diagonal_probabilities_formula(const DensityMatrix& rho, const UnitaryPath& path,
                                            double t);

// Bisection on S(t) - h over t in [0, 1]. Requires S(rho) <= h <= log2(d);
// returns a basis B' with |S(dephase(rho, B')) - h| <= tol. S(t) need not be
// monotone; the endpoint values guarantee a sign change across the bracket.
BasisSearchResult find_target_basis(const DensityMatrix& rho, double h,
                                    double tol = kDefaultEntropyTol);

}  // namespace etsc
