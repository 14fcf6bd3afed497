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

#include "qcd/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qcd::report {

namespace {

using nlohmann::ordered_json;

void write(std::ostream& os, const ordered_json& j, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad_in << ordered_json(key).dump() << ": ";
        write(os, value, depth + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad_in;
        write(os, value, depth + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case ordered_json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v))
        throw std::invalid_argument("report: non-finite numeric field");
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << buf;
      return;
    }
    default:
      os << j.dump();  // strings, ints, bools, null
      return;
  }
}

ordered_json pauli_terms_json(const PauliDecomposition& decomp) {
  ordered_json terms = ordered_json::array();
  for (const auto& term : decomp.terms)
    terms.push_back({{"string", term.string.name()}, {"coeff", term.coeff}});
  return terms;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < n) ++b;
  return b;
}

}  // namespace

std::string dump(const ordered_json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

ordered_json ccop_fragment(const CcopDetection& det) {
  ordered_json frag;
  frag["class"] = "ccop";
  frag["detected"] = det.verdict.detected;
  frag["expectation"] = det.verdict.expectation;
  frag["lambda_min"] = det.lambda_min;
  ordered_json pauli = ordered_json::array();
  std::vector<std::string> annotations = det.verdict.annotations;
  if (det.witness) {
    const std::size_t dim = det.witness->matrix.rows();
    if (is_power_of_two(dim)) {
      pauli = pauli_terms_json(
          pauli_decompose(det.witness->matrix, log2_exact(dim)));
    } else {
      annotations.push_back(
          "witness not decomposed into Pauli terms: non-qubit dimensions");
    }
  }
  frag["witness_pauli"] = std::move(pauli);
  frag["annotations"] = annotations;
  return frag;
}

ordered_json be_fragment(const BeAnalysis& analysis) {
  ordered_json frag;
  frag["class"] = "be";
  frag["alpha_be"] = analysis.alpha_be;
  frag["alpha_sep"] = analysis.alpha_sep;
  ordered_json schmidt;
  for (Cut cut : kAllCuts)
    schmidt[cut_name(cut)] = analysis.schmidt[static_cast<std::size_t>(cut)];
  frag["schmidt"] = std::move(schmidt);
  frag["detected"] = analysis.verdict.detected;
  frag["expectation"] = analysis.verdict.expectation;
  return frag;
}

ordered_json measurement_fragment(const PauliDecomposition& decomp,
                                  const ShotEstimate& est,
                                  const Verdict& verdict) {
  ordered_json frag;
  frag["pauli_terms"] = pauli_terms_json(decomp);
  frag["shots_per_term"] = est.shots_per_term;
  frag["seed"] = est.seed;
  frag["estimate"] = est.estimate;
  frag["stderr"] = est.std_error;
  frag["detected"] = verdict.detected;
  return frag;
}

}  // namespace qcd::report
