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

#include "qcd/spec_io.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace qcd {

namespace {

using nlohmann::ordered_json;

double require_number(const ordered_json& j, const char* what) {
  if (!j.is_number()) throw SpecError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t perfect_square_root(std::size_t n) {
  const auto r = static_cast<std::size_t>(std::llround(std::sqrt(
      static_cast<double>(n))));
  return r * r == n ? r : 0;
}

std::optional<GateSpec> try_two_qudit_view(const ComplexMatrix& u) {
  const std::size_t d = perfect_square_root(u.rows());
  if (d < 2) return std::nullopt;
  return GateSpec(u, {d, d});
}

ParsedSpec from_gate(GateSpec gate, ordered_json canonical) {
  KrausChannel channel = unitary_channel(gate);
  return ParsedSpec{std::move(channel), std::move(gate), std::move(canonical)};
}

}  // namespace

ComplexMatrix parse_matrix(const ordered_json& rows) {
  if (!rows.is_array() || rows.empty())
    throw SpecError("matrix must be a non-empty array of rows");
  const std::size_t n_cols = rows[0].is_array() ? rows[0].size() : 0;
  if (n_cols == 0) throw SpecError("matrix rows must be non-empty arrays");

  ComplexMatrix m(rows.size(), n_cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array()) throw SpecError("matrix rows must be arrays");
    if (row.size() != n_cols) throw SpecError("matrix has ragged rows");
    for (std::size_t j = 0; j < n_cols; ++j) {
      const auto& entry = row[j];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number())
        throw SpecError("matrix entries must be 2-arrays [re, im]");
      m(i, j) = cplx(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ParsedSpec parse_channel_spec(const ordered_json& spec) {
  if (!spec.is_object()) throw SpecError("channel spec must be a JSON object");
  if (!spec.contains("kind") || !spec["kind"].is_string())
    throw SpecError("channel spec needs a string field \"kind\"");
  const std::string kind = spec["kind"].get<std::string>();

  try {
    if (kind == "dephasing") {
      if (!spec.contains("p")) throw SpecError("dephasing spec needs \"p\"");
      const double p = require_number(spec["p"], "\"p\"");
      return ParsedSpec{dephasing(p), std::nullopt, spec};
    }

    if (kind == "unitary") {
      if (!spec.contains("matrix"))
        throw SpecError("unitary spec needs \"matrix\"");
      ComplexMatrix u = parse_matrix(spec["matrix"]);
      if (!u.is_square()) throw SpecError("unitary matrix must be square");
      GateSpec whole(u, {u.rows()});  // checks unitarity
      ParsedSpec parsed{unitary_channel(whole), try_two_qudit_view(u), spec};
      return parsed;
    }

    if (kind == "kraus") {
      if (!spec.contains("matrices") || !spec["matrices"].is_array() ||
          spec["matrices"].empty())
        throw SpecError("kraus spec needs a non-empty array \"matrices\"");
      std::vector<ComplexMatrix> ops;
      for (const auto& mj : spec["matrices"]) ops.push_back(parse_matrix(mj));
      const std::size_t d = ops[0].rows();
      for (const auto& op : ops)
        if (!op.is_square() || op.rows() != d)
          throw SpecError("kraus operators must share one square dimension");
      KrausChannel ch(std::move(ops), d);
      const ValidationReport report = validate(ch);
      if (!report.ok)
        throw SpecError("kraus list is not trace preserving (deviation " +
                        std::to_string(report.max_deviation) + ")");
      return ParsedSpec{std::move(ch), std::nullopt, spec};
    }

    if (kind == "builtin") {
      if (!spec.contains("name") || !spec["name"].is_string())
        throw SpecError("builtin spec needs a string field \"name\"");
      const std::string name = spec["name"].get<std::string>();
      std::size_t dim = 2;
      if (spec.contains("dim")) {
        const double d = require_number(spec["dim"], "\"dim\"");
        if (d < 2 || d != std::floor(d))
          throw SpecError("\"dim\" must be an integer >= 2");
        dim = static_cast<std::size_t>(d);
      }
      if (name == "V") return from_gate(gate_V(), spec);
      if (name == "swap") return from_gate(swap_gate(dim), spec);
      if (name == "identity") {
        KrausChannel ch = identity_channel(dim);
        std::optional<GateSpec> gate;
        const std::size_t d = perfect_square_root(dim);
        if (d >= 2) gate = identity_gate(d);
        return ParsedSpec{std::move(ch), std::move(gate), spec};
      }
      throw SpecError("unknown builtin \"" + name + "\"");
    }
  } catch (const std::invalid_argument& e) {
    // Constructor-level validation (range, unitarity, shapes) counts as an
    // invalid spec.
    throw SpecError(e.what());
  }

  throw SpecError("unknown channel kind \"" + kind + "\"");
}

}  // namespace qcd
