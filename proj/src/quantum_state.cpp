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

#include "etsc/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace etsc {

namespace {

constexpr double kClusterGap = 1e-10;
constexpr double kDiagonalClampTol = 1e-12;

void check_square(const ComplexMatrix& m, const char* role) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw validation_error(std::string(role) + " must be square and non-empty, got " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (m.rows() > kMaxSingleSystemDim) {
    throw validation_error(std::string(role) + " dimension " + std::to_string(m.rows()) +
                           " exceeds the single-system cap " + std::to_string(kMaxSingleSystemDim));
  }
}

double entropy_bits_of_spectrum(RealVector evals, int d) {
  double sum = 0.0;
  for (int i = 0; i < evals.size(); ++i) {
    double& v = evals[i];
    if (v < 0.0) {
      if (v < -kPsdTol) {
        throw numeric_error("negative eigenvalue " + std::to_string(v) +
                            " below the clamping tolerance");
      }
      v = 0.0;
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kTraceTol + d * kPsdTol) {
    throw numeric_error("spectrum sums to " + std::to_string(sum) + ", expected 1");
  }
  double h = 0.0;
  for (int i = 0; i < evals.size(); ++i) {
    const double p = evals[i] / sum;
    if (p > 0.0) h -= p * std::log2(p);
  }
  return std::clamp(h, 0.0, std::log2(static_cast<double>(d)));
}

// Raw measurement diagonal with tiny negatives clamped to zero.
std::vector<double> raw_diagonal(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  if (rho.dim() != basis.dim()) {
    throw validation_error("state dimension " + std::to_string(rho.dim()) +
                           " does not match basis dimension " + std::to_string(basis.dim()));
  }
  const int d = rho.dim();
  const ComplexMatrix rotated = basis.matrix().adjoint() * rho.matrix() * basis.matrix();
  std::vector<double> diag(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    double v = rotated(i, i).real();
    if (v < -kDiagonalClampTol) {
      throw validation_error("measurement diagonal entry " + std::to_string(v) +
                             " is negative beyond tolerance");
    }
    diag[static_cast<std::size_t>(i)] = std::max(v, 0.0);
  }
  return diag;
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& a, int n) {
  if (n < 1) throw validation_error("kron_power requires n >= 1");
  ComplexMatrix out = a;
  for (int i = 1; i < n; ++i) out = kron(out, a);
  return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  check_square(m_, "density matrix");
  const double herm = max_abs(m_ - m_.adjoint());
  if (herm > kHermitianTol) {
    throw validation_error("density matrix is not Hermitian: max |M - M^dag| = " +
                           std::to_string(herm));
  }
  const double trace_err = std::abs(m_.trace() - Complex(1.0, 0.0));
  if (trace_err > kTraceTol) {
    throw validation_error("density matrix trace differs from 1: |tr - 1| = " +
                           std::to_string(trace_err));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw numeric_error("eigensolver failed on density matrix");
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    throw validation_error("density matrix is not PSD: smallest eigenvalue = " +
                           std::to_string(min_eig));
  }
}

OrthonormalBasis::OrthonormalBasis(ComplexMatrix u) : u_(std::move(u)) {
  check_square(u_, "basis");
  const int d = static_cast<int>(u_.rows());
  const double err = max_abs(u_.adjoint() * u_ - ComplexMatrix::Identity(d, d));
  if (err > kUnitaryTol) {
    throw validation_error("basis is not unitary: max |U^dag U - I| = " + std::to_string(err));
  }
}

OrthonormalBasis OrthonormalBasis::standard(int d) {
  if (d < 1) throw validation_error("basis dimension must be >= 1");
  return OrthonormalBasis(ComplexMatrix::Identity(d, d));
}

namespace detail {

void fix_column_phases(ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double a = std::abs(m(i, j));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    if (best <= 0.0) continue;
    const Complex z = m(imax, j);
    m.col(j) *= std::conj(z) / std::abs(z);
  }
}

ComplexMatrix canonical_subspace_basis(const ComplexMatrix& projector, int rank) {
  const Eigen::Index d = projector.rows();
  if (rank < 1 || rank > d) throw validation_error("subspace rank out of range");

  // Residuals of the projector columns, orthogonalized in place against the
  // accepted vectors (modified Gram-Schmidt with full pivoting).
  ComplexMatrix residuals = projector;
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  ComplexMatrix basis(d, rank);
  for (int step = 0; step < rank; ++step) {
    Eigen::Index pick = -1;
    double best = -1.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      const double nrm = residuals.col(i).norm();
      if (nrm > best + 1e-15) {
        best = nrm;
        pick = i;
      }
    }
    if (pick < 0 || best < 1e-7) {
      throw numeric_error("projector rank deficient while extracting canonical basis");
    }
    used[static_cast<std::size_t>(pick)] = true;
    ComplexVector v = residuals.col(pick) / best;
    // Second orthogonalization pass tightens orthogonality to round-off.
    for (int k = 0; k < step; ++k) v -= basis.col(k).dot(v) * basis.col(k);
    v.normalize();
    basis.col(step) = v;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (!used[static_cast<std::size_t>(i)]) {
        residuals.col(i) -= v.dot(residuals.col(i)) * v;
      }
    }
  }
  return basis;
}

}  // namespace detail

SpectralDecomposition spectral_decomposition(const DensityMatrix& rho) {
  const int d = rho.dim();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix());
  if (es.info() != Eigen::Success) throw numeric_error("eigensolver failed on density matrix");

  // Descending order.
  RealVector evals = es.eigenvalues().reverse();
  ComplexMatrix evecs = es.eigenvectors().rowwise().reverse();

  // Canonicalize cluster by cluster.
  int a = 0;
  while (a < d) {
    int b = a + 1;
    while (b < d && evals[b - 1] - evals[b] < kClusterGap) ++b;
    const int k = b - a;
    const ComplexMatrix cluster = evecs.middleCols(a, k);
    const ComplexMatrix projector = cluster * cluster.adjoint();
    ComplexMatrix canon = detail::canonical_subspace_basis(projector, k);
    // Re-diagonalize the restriction so eigenvalue/vector pairing survives
    // the canonical rotation.
    const ComplexMatrix restricted = canon.adjoint() * rho.matrix() * canon;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es2(restricted);
    if (es2.info() != Eigen::Success) throw numeric_error("cluster eigensolver failed");
    evals.segment(a, k) = es2.eigenvalues().reverse();
    evecs.middleCols(a, k) = canon * es2.eigenvectors().rowwise().reverse();
    a = b;
  }
  detail::fix_column_phases(evecs);

  const double recon = max_abs(evecs * evals.asDiagonal() * evecs.adjoint() - rho.matrix());
  if (recon > kReconstructionTol) {
    throw numeric_error("spectral reconstruction residual " + std::to_string(recon) +
                        " exceeds tolerance");
  }
  return SpectralDecomposition{std::move(evals), OrthonormalBasis(std::move(evecs))};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw numeric_error("eigensolver failed on density matrix");
  return entropy_bits_of_spectrum(es.eigenvalues(), rho.dim());
}

Distribution measurement_diagonal(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  return Distribution(raw_diagonal(rho, basis), 1e-10);
}

DensityMatrix dephase(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  std::vector<double> diag = raw_diagonal(rho, basis);
  double sum = 0.0;
  for (double v : diag) sum += v;
  if (std::abs(sum - 1.0) > 1e-10) {
    throw numeric_error("dephased diagonal sums to " + std::to_string(sum));
  }
  Eigen::VectorXd p(static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) p[static_cast<Eigen::Index>(i)] = diag[i] / sum;
  ComplexMatrix m = basis.matrix() * p.asDiagonal() * basis.matrix().adjoint();
  m = (m + m.adjoint()) / 2.0;
  return DensityMatrix(std::move(m));
}

}  // namespace etsc
