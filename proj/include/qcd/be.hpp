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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qcd/ccop.hpp"
#include "qcd/channels.hpp"
#include "qcd/tensor.hpp"

namespace qcd {

// Four-partite layout for a two-qudit gate's Choi vector: outputs A=0, B=1,
// references C=2, D=3, with pairings A-C and B-D. Bi-entangling detection
// looks at the three two-versus-two cuts below.
enum class Cut { kAcBd = 0, kAdBc = 1, kAbCd = 2 };

inline constexpr std::array<Cut, 3> kAllCuts{Cut::kAcBd, Cut::kAdBc,
                                             Cut::kAbCd};

const char* cut_name(Cut cut);  // "AC|BD", "AD|BC", "AB|CD"
Bipartition cut_bipartition(Cut cut);

/// Schmidt coefficients of a four-partite vector across the three cuts,
/// indexed by Cut. Each list is descending.
std::array<std::vector<double>, 3> bipartition_schmidt(const PureState& u_vec);

/// Largest Schmidt coefficient over all three cuts; in [1/d, 1] for a
/// two-qudit gate vector.
double alpha_be(const PureState& u_vec);

/// Largest Schmidt coefficient of the AC|BD cut alone.
double alpha_sep(const PureState& u_vec);

/// W = alpha_BE^2 I - |U><U| on the four-partite space. Negative expectation
/// on the gate's own Choi state flags a non-bi-entangling operation.
ComplexMatrix be_witness(const GateSpec& g);

/// W = alpha_sep^2 I - |U><U| with alpha_sep from the AC|BD cut only: the
/// analogous witness against separable maps.
ComplexMatrix sep_witness(const GateSpec& g);

/// Expectation Tr[W_BE C_U] = alpha_BE^2 - 1; detected iff below -tol.
Verdict detect_non_be(const GateSpec& g, double tol = 1e-9);

/// Everything the report needs in one pass.
struct BeAnalysis {
  std::array<std::vector<double>, 3> schmidt;  // indexed by Cut
  double alpha_be;
  double alpha_sep;
  ComplexMatrix witness_be;
  ComplexMatrix witness_sep;
  Verdict verdict;
};

BeAnalysis analyze_be(const GateSpec& g, double tol = 1e-9);

/// Pure state that is a product across its cut: a Haar-random vector on the
/// left block tensored with one on the right block, in A,B,C,D order.
struct BiseparableSample {
  PureState vector;
  Bipartition cut;
};

/// dims lists all four subsystem dimensions in natural order. Deterministic
/// in (cut, dims, seed); parallel callers should derive per-sample seeds via
/// Rng::derive(base_seed, sample_index).
BiseparableSample sample_biseparable(const Bipartition& cut,
                                     const std::vector<std::size_t>& dims,
                                     std::uint64_t seed);

/// Three-cut Schmidt data for a non-unitary two-qudit channel: one entry per
/// Choi eigenvector with nonnegligible weight, no verdict attached.
struct MixedCutAnalysis {
  std::vector<double> weights;  // Choi eigenvalues, descending
  std::vector<std::array<std::vector<double>, 3>> schmidt;
};

MixedCutAnalysis mixed_channel_schmidt(const ChoiState& c,
                                       double weight_cutoff = 1e-12);

}  // namespace qcd
