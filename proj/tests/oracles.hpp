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

// Test-only reference implementations. Everything here goes through Eigen
// or naive index bookkeeping so it stays independent of the library's own
// Jacobi/one-sided-Jacobi code paths.

#pragma once

#include <cstdint>
#include <vector>

#include "qcd/channels.hpp"
#include "qcd/complex_matrix.hpp"
#include "qcd/tensor.hpp"

namespace qcd::oracle {

/// Eigenvalues of a Hermitian matrix, ascending (Eigen SelfAdjointEigenSolver).
std::vector<double> eigenvalues(const ComplexMatrix& m);

/// Singular values, descending (Eigen JacobiSVD).
std::vector<double> singular_values(const ComplexMatrix& m);

/// Schmidt coefficients across a cut via explicit reshape + Eigen SVD.
std::vector<double> schmidt(const PureState& v, const Bipartition& cut);

/// Naive entrywise partial transpose written directly from the definition.
ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                const std::vector<std::size_t>& dims,
                                std::size_t subsystem);

/// Haar-distributed unitary (Ginibre + Householder QR with phase fix).
ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed);

/// Random density matrix, Ginibre ensemble: G G^dag / Tr.
ComplexMatrix random_density(std::size_t n, std::uint64_t seed);

/// Random Hermitian matrix with entries of order one.
ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed);

/// Random trace-preserving channel: a Haar-random isometry d -> d*k split
/// into k Kraus operators.
KrausChannel random_channel(std::size_t d, std::size_t k, std::uint64_t seed);

/// True when the partial transpose (on subsystem 0 of a d x d bipartition)
/// has no eigenvalue below -1e-12, judged by the Eigen solver.
bool is_ppt(const ComplexMatrix& rho, const std::vector<std::size_t>& dims);

}  // namespace qcd::oracle
