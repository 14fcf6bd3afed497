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

namespace qcd {

// Subsystem convention used everywhere: big-endian. In a basis label
// |a b c d> subsystem 0 is `a`, the most significant digit of the flat
// index. kron(A, B) therefore puts A on subsystem 0.

/// Normalized pure state over an ordered list of subsystems.
struct PureState {
  /// Validates product(dims) == amplitude count and unit norm
  /// (|norm^2 - 1| <= 1e-12). Throws std::invalid_argument otherwise.
  PureState(std::vector<cplx> amplitudes, std::vector<std::size_t> dims);

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
  /// Rank-1 projector |v><v|.
  ComplexMatrix projector() const;

  std::vector<cplx> amplitudes;
  std::vector<std::size_t> dims;
};

/// A two-block split of subsystem indices. Both blocks are kept sorted;
/// together they must cover 0..n_subsystems-1 exactly.
struct Bipartition {
  Bipartition(std::vector<std::size_t> left_indices, std::size_t n_subsystems);

  std::size_t n_subsystems() const { return left.size() + right.size(); }

  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// |alpha> = (1/sqrt(d)) sum_k |k>|k> with dims = [d, d]. Requires d >= 2.
PureState max_entangled(std::size_t d);

/// Transposes the indices of one subsystem only. `m` must be square with
/// size prod(dims). Hermiticity is preserved.
ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                const std::vector<std::size_t>& dims,
                                std::size_t subsystem);

/// Reorders subsystems: output position j carries input subsystem perm[j].
/// `perm` must be a permutation of 0..n-1. Norm is preserved.
PureState permute_subsystems(const PureState& v,
                             const std::vector<std::size_t>& perm);

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, i-th matches i-th value
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Input must be Hermitian within `hermitian_tol` (max-norm); rotation
/// sweeps run until the off-diagonal Frobenius norm drops below 1e-12.
EigResult hermitian_eig(const ComplexMatrix& m, double hermitian_tol = 1e-10);

/// Schmidt coefficients of `v` across `cut`, descending. These are the
/// singular values of the state reshaped (left block first, each block in
/// ascending index order) into a left x right matrix; min(dL, dR) values
/// are returned including exact zeros.
std::vector<double> schmidt_coefficients(const PureState& v,
                                         const Bipartition& cut);

/// Traces out every subsystem not listed in `keep` (indices, any order).
/// The kept subsystems stay in ascending index order.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

}  // namespace qcd
