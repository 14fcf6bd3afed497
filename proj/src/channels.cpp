// Copyright 2026 The qcd authors
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

#include "qcd/channels.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcd {

namespace {
constexpr double kTol = 1e-10;
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, std::size_t d)
    : kraus_ops(std::move(ops)), dim(d) {
  if (kraus_ops.empty())
    throw std::invalid_argument("KrausChannel: empty Kraus list");
  for (const auto& k : kraus_ops)
    if (k.rows() != dim || k.cols() != dim)
      throw std::invalid_argument("KrausChannel: Kraus operator shape mismatch");
}

ValidationReport validate(const KrausChannel& ch) {
  ComplexMatrix sum(ch.dim, ch.dim);
  for (const auto& k : ch.kraus_ops) sum += k.adjoint() * k;
  const double dev = max_abs_diff(sum, ComplexMatrix::identity(ch.dim));
  return ValidationReport{dev <= kTol, dev};
}

GateSpec::GateSpec(ComplexMatrix u, std::vector<std::size_t> ds)
    : unitary(std::move(u)), dims(std::move(ds)) {
  const std::size_t total = std::accumulate(dims.begin(), dims.end(),
                                            std::size_t{1}, std::multiplies<>());
  if (!unitary.is_square() || unitary.rows() != total)
    throw std::invalid_argument("GateSpec: matrix does not match qudit dims");
  const ComplexMatrix gram = unitary.adjoint() * unitary;
  if (max_abs_diff(gram, ComplexMatrix::identity(total)) > kTol)
    throw std::invalid_argument("GateSpec: matrix is not unitary");
}

ChoiState::ChoiState(ComplexMatrix mat, std::vector<std::size_t> ds,
                     std::size_t n_out)
    : matrix(std::move(mat)), dims(std::move(ds)), n_outputs(n_out) {
  const std::size_t total = std::accumulate(dims.begin(), dims.end(),
                                            std::size_t{1}, std::multiplies<>());
  if (!matrix.is_square() || matrix.rows() != total)
    throw std::invalid_argument("ChoiState: matrix does not match dims");
  if (n_outputs == 0 || 2 * n_outputs != dims.size())
    throw std::invalid_argument("ChoiState: outputs must pair with references");
  if (!matrix.is_hermitian(kTol))
    throw std::invalid_argument("ChoiState: matrix not Hermitian");
  if (std::abs(matrix.trace() - cplx(1.0)) > kTol)
    throw std::invalid_argument("ChoiState: trace differs from 1");
  const EigResult eig = hermitian_eig(matrix);
  if (eig.eigenvalues.front() < -kTol)
    throw std::invalid_argument("ChoiState: matrix not positive semidefinite");
}

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho) {
  if (!rho.is_square() || rho.rows() != ch.dim)
    throw std::invalid_argument("apply: state dimension mismatch");
  ComplexMatrix out(ch.dim, ch.dim);
  for (const auto& k : ch.kraus_ops) out += k * rho * k.adjoint();
  return out;
}

ChoiState choi(const KrausChannel& ch) {
  const ValidationReport report = validate(ch);
  if (!report.ok)
    throw std::invalid_argument("choi: channel is not trace preserving");

  const std::size_t d = ch.dim;
  // (K (x) I)|alpha> has amplitude K_ij / sqrt(d) on |i>|j>, so the Choi
  // state is the sum of outer products of the flattened Kraus operators.
  ComplexMatrix c(d * d, d * d);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (const auto& k : ch.kraus_ops) {
    std::vector<cplx> vec(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) vec[i * d + j] = w * k(i, j);
    for (std::size_t r = 0; r < d * d; ++r)
      for (std::size_t s = 0; s < d * d; ++s)
        c(r, s) += vec[r] * std::conj(vec[s]);
  }
  return ChoiState(std::move(c), {d, d}, 1);
}

ComplexMatrix compose_transpose_choi(const ChoiState& c) {
  return partial_transpose(c.matrix, c.dims, 0);
}

PureState choi_vector_of_gate(const GateSpec& g) {
  if (g.dims.size() != 2 || g.dims[0] != g.dims[1])
    throw std::invalid_argument(
        "choi_vector_of_gate: gate must act on two equal qudits");
  const std::size_t d = g.dims[0];

  // |alpha>_AC (x) |alpha>_BD is built in subsystem order (A, C, B, D);
  // reorder to (A, B, C, D), then act with U on the leading pair.
  const PureState alpha = max_entangled(d);
  std::vector<cplx> amps(d * d * d * d);
  for (std::size_t i = 0; i < d * d; ++i)
    for (std::size_t j = 0; j < d * d; ++j)
      amps[i * d * d + j] = alpha.amplitudes[i] * alpha.amplitudes[j];
  const PureState grouped(std::move(amps), {d, d, d, d});  // order A,C,B,D
  const PureState ordered = permute_subsystems(grouped, {0, 2, 1, 3});

  const ComplexMatrix op = kron(g.unitary, ComplexMatrix::identity(d * d));
  return PureState(op * ordered.amplitudes, {d, d, d, d});
}

KrausChannel dephasing(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("dephasing: p must lie in [0, 1]");
  ComplexMatrix keep = ComplexMatrix::identity(2);
  keep *= std::sqrt(p);
  ComplexMatrix flip = pauli_z();
  flip *= std::sqrt(1.0 - p);
  return KrausChannel({keep, flip}, 2);
}

KrausChannel unitary_channel(const GateSpec& g) {
  return KrausChannel({g.unitary}, g.total_dim());
}

KrausChannel identity_channel(std::size_t d) {
  return KrausChannel({ComplexMatrix::identity(d)}, d);
}

GateSpec gate_V() {
  return GateSpec(ComplexMatrix::from_rows({{1, 0, 0, 0},
                                            {0, 0, 1, 0},
                                            {0, 1, 0, 0},
                                            {0, 0, 0, -1}}),
                  {2, 2});
}

GateSpec swap_gate(std::size_t d) {
  ComplexMatrix u(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) u(i * d + j, j * d + i) = 1.0;
  return GateSpec(std::move(u), {d, d});
}

GateSpec identity_gate(std::size_t d) {
  return GateSpec(ComplexMatrix::identity(d * d), {d, d});
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }

ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows({{0, cplx(0, -1)}, {cplx(0, 1), 0}});
}

ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1, 0}, {0, -1}}); }

}  // namespace qcd
