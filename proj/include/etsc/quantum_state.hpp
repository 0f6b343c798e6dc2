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

#include <complex>

#include <Eigen/Dense>

#include "etsc/classical_types.hpp"
#include "etsc/errors.hpp"

namespace etsc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Single-system operators are dense; tensor powers are handled by product
// formulas elsewhere, so d stays small.
inline constexpr int kMaxSingleSystemDim = 64;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kReconstructionTol = 1e-10;

// Largest absolute entry.
double max_abs(const ComplexMatrix& m);

// Kronecker product, row-major index convention: (i1*rows2+i2, j1*cols2+j2).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// n-fold Kronecker power.
ComplexMatrix kron_power(const ComplexMatrix& a, int n);

// A d x d complex Hermitian PSD unit-trace operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

// A d x d unitary whose columns are the basis states.
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(ComplexMatrix u);

  static OrthonormalBasis standard(int d);

  int dim() const { return static_cast<int>(u_.rows()); }
  const ComplexMatrix& matrix() const { return u_; }
  ComplexVector column(int i) const { return u_.col(i); }

 private:
  ComplexMatrix u_;
};

// Eigenvalues sorted descending with a deterministically chosen eigenbasis.
struct SpectralDecomposition {
  RealVector eigenvalues;
  OrthonormalBasis eigenbasis;
};

// Deterministic Hermitian eigendecomposition. Within every eigenvalue
// cluster (gap < 1e-10) the basis is re-derived canonically from the cluster
// projector and each column's global phase is fixed so its largest-magnitude
// component is real and positive.
SpectralDecomposition spectral_decomposition(const DensityMatrix& rho);

// Entropy of the spectrum in bits. Eigenvalues in [-1e-10, 0) are clamped to
// zero and the spectrum renormalized before taking logs.
double von_neumann_entropy(const DensityMatrix& rho);

// The diagonal <e_i|rho|e_i> of rho in the given basis. Entries are real up
// to rounding; tiny negatives (>= -1e-12) are clamped to zero, and the
// entries sum to 1 within 1e-10.
Distribution measurement_diagonal(const DensityMatrix& rho, const OrthonormalBasis& basis);

// sum_i <e_i|rho|e_i> |e_i><e_i|: rho with all off-diagonal terms in `basis`
// removed.
DensityMatrix dephase(const DensityMatrix& rho, const OrthonormalBasis& basis);

namespace detail {

// Canonical orthonormal basis of the range of a rank-k orthogonal projector:
// modified Gram-Schmidt with full column pivoting over the projector columns.
// Depends only on the projector, not on how it was produced.
ComplexMatrix canonical_subspace_basis(const ComplexMatrix& projector, int rank);

// Rotate each column's global phase so its first largest-magnitude component
// becomes real and positive.
void fix_column_phases(ComplexMatrix& m);

}  // namespace detail

}  // namespace etsc
