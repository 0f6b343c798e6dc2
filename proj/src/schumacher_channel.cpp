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

#include "etsc/schumacher_channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace etsc {

namespace {

constexpr double kChannelTol = 1e-10;
// Full PSD validation of the input operator is an eigensolve; above this
// dimension only the Hermitian and trace checks run.
constexpr std::int64_t kPsdCheckDimensionCap = 512;

void check_channel_input(const CompressionChannel& channel, const ComplexMatrix& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() != channel.dim) {
    throw validation_error("channel input must be " + std::to_string(channel.dim) + "x" +
                           std::to_string(channel.dim) + ", got " + std::to_string(sigma.rows()) +
                           "x" + std::to_string(sigma.cols()));
  }
  const double herm = max_abs(sigma - sigma.adjoint());
  if (herm > kChannelTol) {
    throw validation_error("channel input is not Hermitian: max |M - M^dag| = " +
                           std::to_string(herm));
  }
  const double trace_err = std::abs(sigma.trace() - Complex(1.0, 0.0));
  if (trace_err > kChannelTol) {
    throw validation_error("channel input trace differs from 1: |tr - 1| = " +
                           std::to_string(trace_err));
  }
  if (channel.dim <= kPsdCheckDimensionCap) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sigma, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw numeric_error("eigensolver failed on channel input");
    if (es.eigenvalues().minCoeff() < -kPsdTol) {
      throw validation_error("channel input is not PSD: smallest eigenvalue = " +
                             std::to_string(es.eigenvalues().minCoeff()));
    }
  }
}

}  // namespace

CompressionChannel build_channel(const OrthonormalBasis& basis, const TypicalSetSpec& spec,
                                 std::int64_t dense_cap) {
  const std::vector<SymbolSequence> members = typical_members(spec);
  if (members.empty()) {
    throw validation_error("typical set is empty: no standard state exists for the channel");
  }
  ComplexMatrix projector = dense_projector(basis, spec, dense_cap);
  const std::int64_t dim = projector.rows();

  std::vector<bool> is_member(static_cast<std::size_t>(dim), false);
  for (const SymbolSequence& m : members) {
    is_member[static_cast<std::size_t>(ambient_index(m, spec.d()))] = true;
  }

  ComplexVector standard = product_basis_vector(basis, members.front());
  const std::int64_t standard_index = ambient_index(members.front(), spec.d());

  // Non-typical product vectors, in lexicographic word order.
  ComplexMatrix complement(dim, dim - static_cast<std::int64_t>(members.size()));
  {
    SymbolSequence word{std::vector<int>(static_cast<std::size_t>(spec.n()), 1)};
    Eigen::Index col = 0;
    for (std::int64_t idx = 0; idx < dim; ++idx) {
      if (!is_member[static_cast<std::size_t>(idx)]) {
        complement.col(col++) = product_basis_vector(basis, word);
      }
      // Advance the word through lexicographic order.
      for (int pos = spec.n() - 1; pos >= 0; --pos) {
        int& s = word.symbols[static_cast<std::size_t>(pos)];
        if (s < spec.d()) {
          ++s;
          break;
        }
        s = 1;
      }
    }
  }

  CompressionChannel channel{std::move(projector), std::move(standard), standard_index,
                             std::move(complement), spec.d(), spec.n(), dim};

  const double idem = max_abs(channel.projector * channel.projector - channel.projector);
  if (idem > kChannelTol) {
    throw numeric_error("projector is not idempotent: residual " + std::to_string(idem));
  }
  const double standard_in_range =
      (channel.projector * channel.standard_state - channel.standard_state).norm();
  if (standard_in_range > kChannelTol) {
    throw numeric_error("standard state is outside the retained subspace: residual " +
                        std::to_string(standard_in_range));
  }
  const double completeness =
      max_abs(channel.projector + channel.complement_basis * channel.complement_basis.adjoint() -
              ComplexMatrix::Identity(dim, dim));
  if (completeness > kChannelTol) {
    throw numeric_error("projector plus complement does not resolve the identity: residual " +
                        std::to_string(completeness));
  }
  return channel;
}

ComplexMatrix apply_channel(const CompressionChannel& channel, const ComplexMatrix& sigma) {
  check_channel_input(channel, sigma);
  ComplexMatrix out = channel.projector * sigma * channel.projector;
  // sum_u <u|sigma|u>, the weight collapsed onto the standard state.
  const ComplexMatrix rotated =
      channel.complement_basis.adjoint() * sigma * channel.complement_basis;
  const double collapsed = rotated.diagonal().real().sum();
  out += collapsed * (channel.standard_state * channel.standard_state.adjoint());
  out = (out + out.adjoint()) / 2.0;
  return out;
}

FidelityReport channel_fidelity(const CompressionChannel& channel, const DensityMatrix& rho,
                                int n) {
  if (n != channel.n || rho.dim() != channel.d) {
    throw validation_error("state/block length does not match the channel geometry");
  }
  const ComplexMatrix sigma = kron_power(rho.matrix(), n);

  const Complex projected_trace = (channel.projector * sigma).trace();
  const double projected = std::norm(projected_trace);

  // tr(E_u sigma) = <u|sigma|0>.
  const ComplexVector amplitudes =
      channel.complement_basis.adjoint() * (sigma * channel.standard_state);
  const double residual = amplitudes.squaredNorm();

  const double fidelity = projected + residual;
  const double delta = 1.0 - projected_trace.real();
  const double lower_bound = 1.0 - 2.0 * delta;
  if (fidelity < std::max(0.0, lower_bound) - 1e-12) {
    throw numeric_error("fidelity " + std::to_string(fidelity) +
                        " fell below its certified lower bound " + std::to_string(lower_bound));
  }
  return FidelityReport{fidelity, projected, residual, lower_bound};
}

RateReport compression_rate(std::int64_t n, int d, double h, double epsilon) {
  if (n < 1 || d < 1) throw validation_error("compression rate requires n >= 1 and d >= 1");
  if (!(h >= 0.0) || !(epsilon > 0.0)) {
    throw validation_error("compression rate requires h >= 0 and epsilon > 0");
  }
  const double dd = static_cast<double>(d);
  const double rate =
      (dd * dd + dd) * std::log2(static_cast<double>(n) + 1.0) / static_cast<double>(n) + h +
      epsilon;
  return RateReport{rate, h + epsilon};
}

}  // namespace etsc
