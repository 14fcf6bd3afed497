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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcd/channels.hpp"
#include "qcd/complex_matrix.hpp"
#include "qcd/tensor.hpp"

namespace qcd {

/// Outcome of a detection test. `detected` holds exactly when
/// expectation < -tolerance.
struct Verdict {
  bool detected;
  double expectation;
  double tolerance;
  std::vector<std::string> annotations;
};

/// Witness against complete co-positivity: the partial transpose (on the
/// output subsystem) of the projector onto the most negative eigenvector of
/// the partially transposed Choi state. Non-negative on every PPT state.
struct CcopWitness {
  ComplexMatrix matrix;
  double lambda_min;
  PureState eigvec;
};

/// Raised when the partially transposed Choi state has no eigenvalue below
/// -tol, i.e. the Choi is PPT and this construction yields no witness.
struct NoWitnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Most negative eigenvalue of the partially transposed Choi state together
/// with its eigenvector. For a degenerate bottom eigenvalue the eigenvector
/// is whichever the eigensolver returns first.
std::pair<double, PureState> min_pt_eigenpair(const ChoiState& c);

/// Builds the witness; throws NoWitnessError when the Choi state is PPT
/// within tol.
CcopWitness ccop_witness(const ChoiState& c, double tol = 1e-9);

/// Full detection result, as consumed by reports: the verdict, the bottom
/// eigenvalue, and the witness when one exists.
struct CcopDetection {
  Verdict verdict;
  double lambda_min;
  std::optional<CcopWitness> witness;
};

CcopDetection analyze_ccop(const KrausChannel& ch, double tol = 1e-9);

/// Verdict-only wrapper around analyze_ccop. Detected channels carry the
/// entanglement-breaking implication in the annotations; PPT Choi states
/// yield a non-detection annotated "Choi is PPT".
Verdict detect_non_ccop(const KrausChannel& ch, double tol = 1e-9);

}  // namespace qcd
