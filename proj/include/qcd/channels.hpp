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

#pragma once

#include <cstddef>
#include <vector>

#include "qcd/complex_matrix.hpp"
#include "qcd/tensor.hpp"

namespace qcd {

/// Completely positive map in Kraus form: rho -> sum_i K_i rho K_i^dagger.
/// Construction checks shapes only; trace preservation is checked by
/// validate().
struct KrausChannel {
  KrausChannel(std::vector<ComplexMatrix> kraus_ops, std::size_t dim);

  std::vector<ComplexMatrix> kraus_ops;
  std::size_t dim;
};

struct ValidationReport {
  bool ok;
  double max_deviation;  // max |(sum K^dag K - I)_ij|
};

/// Trace preservation check: sum K^dagger K = I within 1e-10 (max-norm).
ValidationReport validate(const KrausChannel& ch);

/// Unitary gate together with its qudit layout (one dims entry per qudit).
/// Construction verifies U^dagger U = I within 1e-10.
struct GateSpec {
  GateSpec(ComplexMatrix unitary, std::vector<std::size_t> dims);

  std::size_t total_dim() const { return unitary.rows(); }

  ComplexMatrix unitary;
  std::vector<std::size_t> dims;
};

/// State of the doubled space carrying a channel: outputs first, then the
/// matching references (output j is entangled with reference n_outputs + j).
/// Construction validates Hermiticity, unit trace and positivity
/// (eigenvalues >= -1e-10).
struct ChoiState {
  ChoiState(ComplexMatrix matrix, std::vector<std::size_t> dims,
            std::size_t n_outputs);

  ComplexMatrix matrix;
  std::vector<std::size_t> dims;
  std::size_t n_outputs;
};

/// sum_i K_i rho K_i^dagger; rho must be dim x dim.
ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho);

/// Choi state (M (x) Id)[|alpha><alpha|]: the channel acts on subsystem 0,
/// the reference subsystem 1 is untouched. Requires a validated channel.
ChoiState choi(const KrausChannel& ch);

/// Choi matrix of the channel composed with transposition, realized as the
/// partial transpose of the Choi state on the first (output) subsystem.
/// Hermitian with unit trace but possibly non-positive.
ComplexMatrix compose_transpose_choi(const ChoiState& c);

/// Choi vector of a two-qudit gate: (U_AB (x) Id_CD) |alpha>_AC |alpha>_BD
/// in subsystem order A, B, C, D. Requires dims = [d, d].
PureState choi_vector_of_gate(const GateSpec& g);

// The paper-of-record channels and gates for this library.

/// rho -> p rho + (1-p) sigma_z rho sigma_z with Kraus ops
/// {sqrt(p) I, sqrt(1-p) sigma_z}. Requires 0 <= p <= 1.
KrausChannel dephasing(double p);

/// Single-Kraus channel rho -> U rho U^dagger over the gate's total space.
KrausChannel unitary_channel(const GateSpec& g);

/// d-dimensional identity channel.
KrausChannel identity_channel(std::size_t d);

/// The modified-swap two-qubit gate
///   (1  0  0  0)
///   (0  0  1  0)
///   (0  1  0  0)
///   (0  0  0 -1)
GateSpec gate_V();

/// SWAP of two d-dimensional qudits.
GateSpec swap_gate(std::size_t d);

/// Identity gate on two d-dimensional qudits.
GateSpec identity_gate(std::size_t d);

// Pauli matrices; handy in witnesses and tests alike.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace qcd
