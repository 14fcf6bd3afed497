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

#include <string>
#include <string_view>

#include <json.hpp>

#include "qcd/be.hpp"
#include "qcd/ccop.hpp"
#include "qcd/measure.hpp"

namespace qcd::report {

/// Serializes with 17 significant digits on floats so every value
/// round-trips exactly, and throws on non-finite numbers. Output is
/// byte-stable for identical inputs.
std::string dump(const nlohmann::ordered_json& j);

/// FNV-1a 64-bit digest, rendered as 16 hex characters.
std::string fnv1a_hex(std::string_view s);

nlohmann::ordered_json ccop_fragment(const CcopDetection& det);
nlohmann::ordered_json be_fragment(const BeAnalysis& analysis);
nlohmann::ordered_json measurement_fragment(const PauliDecomposition& decomp,
                                            const ShotEstimate& est,
                                            const Verdict& verdict);

}  // namespace qcd::report
