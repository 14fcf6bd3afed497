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

#include <cstdint>
#include <string>
#include <vector>

#include "qcd/ccop.hpp"
#include "qcd/complex_matrix.hpp"

namespace qcd {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// One tensor product of single-qubit Paulis, qubit 0 first (most
/// significant index digit, as everywhere in this library).
struct PauliString {
  std::vector<Pauli> letters;

  std::string name() const;  // e.g. "XYIZ"
  bool is_identity() const;
  ComplexMatrix matrix() const;
};

/// Hermitian operator expanded as sum_P coeff_P * P. Coefficients are real;
/// terms are listed in lexicographic string order (I < X < Y < Z).
struct PauliDecomposition {
  struct Term {
    double coeff;
    PauliString string;
  };

  std::vector<Term> terms;
  std::size_t n_qubits;
};

/// Expands a Hermitian operator on n qubits into Pauli strings with
/// coefficients Tr[w P] / 2^n; terms below 1e-12 in magnitude are dropped.
/// Throws if the dimension is not 2^n_qubits or w is not Hermitian.
PauliDecomposition pauli_decompose(const ComplexMatrix& w,
                                   std::size_t n_qubits);

/// Rebuilds the dense operator from its terms.
ComplexMatrix reconstruct(const PauliDecomposition& decomp);

/// Re(Tr[w state]); throws if shapes differ or the trace has an imaginary
/// part above 1e-10.
double exact_expectation(const ComplexMatrix& w, const ComplexMatrix& state);

struct ShotEstimate {
  double estimate;
  double std_error;
  std::size_t shots_per_term;
  std::uint64_t seed;
};

/// Simulates the local-measurement scheme: for every non-identity term the
/// aggregate +-1 outcome is drawn shots_per_term times with
/// P(+1) = (1 + Tr[P state]) / 2, the identity term enters exactly, and the
/// total is sum_P coeff_P * mean_P with uncorrelated error propagation of
/// the per-term sample standard errors. Deterministic in (seed,
/// shots_per_term): term k uses the substream Rng::derive(seed, k).
ShotEstimate simulate_shots(const PauliDecomposition& decomp,
                            const ComplexMatrix& state,
                            std::size_t shots_per_term, std::uint64_t seed);

/// Statistical verdict: detected iff estimate + k_sigma * std_error < 0.
Verdict detection_decision(const ShotEstimate& est, double k_sigma = 3.0);

}  // namespace qcd
