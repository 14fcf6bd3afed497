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

#include <json.hpp>

#include "qcd/channels.hpp"

namespace qcd {

/// Malformed or semantically invalid channel spec.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parsed channel spec. Every spec yields a channel; unitary kinds whose
/// total dimension is a perfect square additionally expose the two-qudit
/// gate view used by bi-entangling analysis.
struct ParsedSpec {
  KrausChannel channel;
  std::optional<GateSpec> two_qudit_gate;
  nlohmann::ordered_json canonical;
};

/// Channel spec schema, field "kind" selects the shape:
///   {"kind": "dephasing", "p": 0.25}
///   {"kind": "unitary",  "matrix": [[[re,im], ...], ...]}
///   {"kind": "kraus",    "matrices": [matrix, ...]}
///   {"kind": "builtin",  "name": "V" | "swap" | "identity", "dim": 2}
/// "swap" takes the per-qudit dimension; "identity" the total channel
/// dimension. Throws SpecError on anything malformed, including ragged
/// matrix rows and non-trace-preserving Kraus lists.
ParsedSpec parse_channel_spec(const nlohmann::ordered_json& spec);

/// Matrix as an array of rows, each entry a 2-array [re, im].
ComplexMatrix parse_matrix(const nlohmann::ordered_json& rows);
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);

}  // namespace qcd
