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

#include "etsc/basis_search.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace etsc {

namespace {

constexpr double kEndpointIdentityTol = 1e-12;
constexpr double kEndpointTransitionTol = 1e-10;

struct FourierEigensystem {
  ComplexMatrix vectors;  // columns, orthonormal
  RealVector phases;      // in [0, 2*pi), ascending
};

// Exact spectral decomposition of fourier_coefficients(d) through its minimal
// polynomial: eigenvalues are the fourth roots of unity, and the projector
// onto the lambda-eigenspace is (1/4) sum_k (conj(lambda) F)^k.
FourierEigensystem fourier_eigensystem(int d) {
  const ComplexMatrix f1 = fourier_coefficients(d);
  const ComplexMatrix f2 = f1 * f1;
  const ComplexMatrix f3 = f2 * f1;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);

  const Complex roots[4] = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};

  FourierEigensystem sys;
  sys.vectors.resize(d, d);
  sys.phases.resize(d);
  int filled = 0;
  for (int m = 0; m < 4; ++m) {
    const Complex lc = std::conj(roots[m]);
    ComplexMatrix proj = 0.25 * (id + lc * f1 + lc * lc * f2 + lc * lc * lc * f3);
    proj = (proj + proj.adjoint()) / 2.0;
    const int rank = static_cast<int>(std::lround(proj.trace().real()));
    if (rank == 0) continue;
    ComplexMatrix basis = detail::canonical_subspace_basis(proj, rank);
    detail::fix_column_phases(basis);
    sys.vectors.middleCols(filled, rank) = basis;
    sys.phases.segment(filled, rank).setConstant(m * std::numbers::pi / 2.0);
    filled += rank;
  }
  if (filled != d) {
    throw numeric_error("fourier eigenspace ranks sum to " + std::to_string(filled) +
                        ", expected " + std::to_string(d));
  }
  const double residual =
      max_abs(f1 * sys.vectors -
              sys.vectors * sys.phases.unaryExpr([](double t) {
                              return Complex(std::cos(t), std::sin(t));
                            }).asDiagonal());
  if (residual > 1e-10) {
    throw numeric_error("fourier eigensystem residual " + std::to_string(residual));
  }
  return sys;
}

ComplexMatrix path_unitary_unchecked(const UnitaryPath& path, double t) {
  const Eigen::Index d = path.phases.size();
  ComplexVector diag(d);
  for (Eigen::Index s = 0; s < d; ++s) {
    const double y = t * path.phases[s];
    diag[s] = Complex(std::cos(y), std::sin(y));
  }
  return path.phase_axes.matrix() * diag.asDiagonal() * path.phase_axes.matrix().adjoint();
}

}  // namespace

ComplexMatrix fourier_coefficients(int d) {
  if (d < 1) throw validation_error("dimension must be >= 1");
  ComplexMatrix f(d, d);
  for (int k = 1; k <= d; ++k) {
    for (int l = 1; l <= d; ++l) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) *
                           static_cast<double>(l) / static_cast<double>(d);
      f(k - 1, l - 1) = Complex(std::cos(angle), std::sin(angle)) / std::sqrt(static_cast<double>(d));
    }
  }
  return f;
}

OrthonormalBasis fourier_basis(const OrthonormalBasis& b0) {
  return OrthonormalBasis(b0.matrix() * fourier_coefficients(b0.dim()));
}

ComplexMatrix transition_unitary(const OrthonormalBasis& b0, const OrthonormalBasis& b1) {
  if (b0.dim() != b1.dim()) {
    throw validation_error("basis dimensions differ: " + std::to_string(b0.dim()) + " vs " +
                           std::to_string(b1.dim()));
  }
  return b1.matrix() * b0.matrix().adjoint();
}

UnitaryPath build_path(const DensityMatrix& rho) {
  const SpectralDecomposition sd = spectral_decomposition(rho);
  const OrthonormalBasis& b0 = sd.eigenbasis;
  const int d = rho.dim();

  const FourierEigensystem sys = fourier_eigensystem(d);
  ComplexMatrix axes = b0.matrix() * sys.vectors;
  detail::fix_column_phases(axes);

  UnitaryPath path{OrthonormalBasis(std::move(axes)), sys.phases, b0};

  const double at_zero = max_abs(path_unitary_unchecked(path, 0.0) - ComplexMatrix::Identity(d, d));
  if (at_zero > kEndpointIdentityTol) {
    throw numeric_error("path does not start at the identity: residual " + std::to_string(at_zero));
  }
  const ComplexMatrix w = transition_unitary(b0, fourier_basis(b0));
  const double at_one = max_abs(path_unitary_unchecked(path, 1.0) - w);
  if (at_one > kEndpointTransitionTol) {
    throw numeric_error("path does not end at the transition unitary: residual " +
                        std::to_string(at_one));
  }
  return path;
}

ComplexMatrix path_unitary(const UnitaryPath& path, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw validation_error("path parameter t = " + std::to_string(t) + " outside [0, 1]");
  }
  return path_unitary_unchecked(path, t);
}

OrthonormalBasis basis_at(const UnitaryPath& path, double t) {
  return OrthonormalBasis(path_unitary(path, t) * path.base_basis.matrix());
}

double entropy_along_path(const DensityMatrix& rho, const UnitaryPath& path, double t) {
  return von_neumann_entropy(dephase(rho, basis_at(path, t)));
}

Distribution diagonal_probabilities_formula(const DensityMatrix& rho, const UnitaryPath& path,
                                            double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw validation_error("path parameter t = " + std::to_string(t) + " outside [0, 1]");
  }
  if (rho.dim() != path.base_basis.dim()) {
    throw validation_error("state and path dimensions differ");
  }
  const int d = rho.dim();
  const SpectralDecomposition sd = spectral_decomposition(rho);

  // Overlaps <e_k^0|a_s> of the base basis with the phase axes.
  const ComplexMatrix overlap = path.base_basis.matrix().adjoint() * path.phase_axes.matrix();
  std::vector<double> probs(static_cast<std::size_t>(d), 0.0);
  for (int i = 0; i < d; ++i) {
    double pi = 0.0;
    for (int k = 0; k < d; ++k) {
      Complex amp(0.0, 0.0);
      for (int s = 0; s < d; ++s) {
        const double y = t * path.phases[s];
        amp += Complex(std::cos(y), std::sin(y)) * overlap(k, s) * std::conj(overlap(i, s));
      }
      pi += sd.eigenvalues[k] * std::norm(amp);
    }
    probs[static_cast<std::size_t>(i)] = pi;
  }
  return Distribution(std::move(probs), 1e-10);
}

BasisSearchResult find_target_basis(const DensityMatrix& rho, double h, double tol) {
  if (!(tol > 0.0)) throw validation_error("tolerance must be > 0");
  const int d = rho.dim();
  const double hmax = std::log2(static_cast<double>(d));
  const double s0 = von_neumann_entropy(rho);
  if (h < s0 - kMembershipSlack || h > hmax + kMembershipSlack) {
    throw domain_error("target entropy h = " + std::to_string(h) + " outside [S(rho), log2(d)] = [" +
                       std::to_string(s0) + ", " + std::to_string(hmax) + "]");
  }

  const UnitaryPath path = build_path(rho);
  const auto entropy_at = [&](double t) { return entropy_along_path(rho, path, t); };

  double lo = 0.0;
  double hi = 1.0;
  const double s_lo = entropy_at(lo);
  if (std::abs(s_lo - h) <= tol) {
    return BasisSearchResult{basis_at(path, lo), lo, s_lo, 0};
  }
  const double s_hi = entropy_at(hi);
  if (std::abs(s_hi - h) <= tol) {
    return BasisSearchResult{basis_at(path, hi), hi, s_hi, 0};
  }
  if (s_lo > h || s_hi < h) {
    throw numeric_error("bisection bracket invalid: S(0) = " + std::to_string(s_lo) +
                        ", S(1) = " + std::to_string(s_hi) + ", h = " + std::to_string(h));
  }

  for (int iter = 1; iter <= kMaxBisectionIterations; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double s_mid = entropy_at(mid);
    if (std::abs(s_mid - h) <= tol) {
      return BasisSearchResult{basis_at(path, mid), mid, s_mid, iter};
    }
    if (s_mid < h) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw numeric_error("bisection did not converge within " +
                      std::to_string(kMaxBisectionIterations) + " iterations; bracket [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace etsc
