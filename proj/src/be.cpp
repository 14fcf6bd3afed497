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

#include "qcd/be.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcd/rng.hpp"

namespace qcd {

namespace {

void require_four_partite(const PureState& v) {
  if (v.dims.size() != 4)
    throw std::invalid_argument("expected a four-partite state");
  for (std::size_t k = 1; k < 4; ++k)
    if (v.dims[k] != v.dims[0])
      throw std::invalid_argument("expected equal qudit dimensions");
}

std::vector<cplx> haar_vector(std::size_t dim, Rng& rng) {
  std::vector<cplx> v(dim);
  double n2 = 0.0;
  for (auto& z : v) {
    z = cplx(rng.gaussian(), rng.gaussian());
    n2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& z : v) z *= inv;
  return v;
}

}  // namespace

const char* cut_name(Cut cut) {
  switch (cut) {
    case Cut::kAcBd:
      return "AC|BD";
    case Cut::kAdBc:
      return "AD|BC";
    case Cut::kAbCd:
      return "AB|CD";
  }
  throw std::invalid_argument("cut_name: unknown cut");
}

Bipartition cut_bipartition(Cut cut) {
  switch (cut) {
    case Cut::kAcBd:
      return Bipartition({0, 2}, 4);
    case Cut::kAdBc:
      return Bipartition({0, 3}, 4);
    case Cut::kAbCd:
      return Bipartition({0, 1}, 4);
  }
  throw std::invalid_argument("cut_bipartition: unknown cut");
}

std::array<std::vector<double>, 3> bipartition_schmidt(const PureState& u_vec) {
  require_four_partite(u_vec);
  std::array<std::vector<double>, 3> out;
  for (Cut cut : kAllCuts)
    out[static_cast<std::size_t>(cut)] =
        schmidt_coefficients(u_vec, cut_bipartition(cut));
  return out;
}

double alpha_be(const PureState& u_vec) {
  const auto schmidt = bipartition_schmidt(u_vec);
  double a = 0.0;
  for (const auto& coeffs : schmidt) a = std::max(a, coeffs.front());
  return a;
}

double alpha_sep(const PureState& u_vec) {
  require_four_partite(u_vec);
  return schmidt_coefficients(u_vec, cut_bipartition(Cut::kAcBd)).front();
}

ComplexMatrix be_witness(const GateSpec& g) {
  const PureState u_vec = choi_vector_of_gate(g);
  const double a = alpha_be(u_vec);
  ComplexMatrix w = ComplexMatrix::identity(u_vec.dim());
  w *= a * a;
  w -= u_vec.projector();
  return w;
}

ComplexMatrix sep_witness(const GateSpec& g) {
  const PureState u_vec = choi_vector_of_gate(g);
  const double a = alpha_sep(u_vec);
  ComplexMatrix w = ComplexMatrix::identity(u_vec.dim());
  w *= a * a;
  w -= u_vec.projector();
  return w;
}

Verdict detect_non_be(const GateSpec& g, double tol) {
  // Tr[(a^2 I - |U><U|) |U><U|] collapses to a^2 - 1 for the unit-norm |U>.
  const double a = alpha_be(choi_vector_of_gate(g));
  const double expectation = a * a - 1.0;
  return Verdict{expectation < -tol, expectation, tol, {}};
}

BeAnalysis analyze_be(const GateSpec& g, double tol) {
  const PureState u_vec = choi_vector_of_gate(g);
  BeAnalysis out{bipartition_schmidt(u_vec), 0.0, 0.0, {}, {}, {}};
  for (const auto& coeffs : out.schmidt)
    out.alpha_be = std::max(out.alpha_be, coeffs.front());
  out.alpha_sep = out.schmidt[static_cast<std::size_t>(Cut::kAcBd)].front();

  const ComplexMatrix proj = u_vec.projector();
  out.witness_be = ComplexMatrix::identity(u_vec.dim());
  out.witness_be *= out.alpha_be * out.alpha_be;
  out.witness_be -= proj;
  out.witness_sep = ComplexMatrix::identity(u_vec.dim());
  out.witness_sep *= out.alpha_sep * out.alpha_sep;
  out.witness_sep -= proj;

  const double expectation = out.alpha_be * out.alpha_be - 1.0;
  out.verdict = Verdict{expectation < -tol, expectation, tol, {}};
  return out;
}

BiseparableSample sample_biseparable(const Bipartition& cut,
                                     const std::vector<std::size_t>& dims,
                                     std::uint64_t seed) {
  if (cut.n_subsystems() != dims.size())
    throw std::invalid_argument("sample_biseparable: cut does not match dims");
  Rng rng(seed);

  std::size_t dl = 1, dr = 1;
  for (std::size_t k : cut.left) dl *= dims[k];
  for (std::size_t k : cut.right) dr *= dims[k];
  const std::vector<cplx> lv = haar_vector(dl, rng);
  const std::vector<cplx> rv = haar_vector(dr, rng);

  // Product vector in grouped order (left block, then right block).
  std::vector<cplx> grouped(dl * dr);
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dr; ++j) grouped[i * dr + j] = lv[i] * rv[j];

  std::vector<std::size_t> grouped_dims;
  std::vector<std::size_t> grouped_order;  // grouped position -> subsystem
  for (std::size_t k : cut.left) {
    grouped_dims.push_back(dims[k]);
    grouped_order.push_back(k);
  }
  for (std::size_t k : cut.right) {
    grouped_dims.push_back(dims[k]);
    grouped_order.push_back(k);
  }
  // perm[j] = grouped position of subsystem j.
  std::vector<std::size_t> perm(dims.size());
  for (std::size_t pos = 0; pos < grouped_order.size(); ++pos)
    perm[grouped_order[pos]] = pos;

  PureState state(std::move(grouped), std::move(grouped_dims));
  return BiseparableSample{permute_subsystems(state, perm), cut};
}

MixedCutAnalysis mixed_channel_schmidt(const ChoiState& c,
                                       double weight_cutoff) {
  std::vector<std::size_t> four_dims;
  if (c.dims.size() == 4) {
    four_dims = c.dims;
  } else if (c.dims.size() == 2 && c.dims[0] == c.dims[1]) {
    const auto d = static_cast<std::size_t>(std::llround(
        std::sqrt(static_cast<double>(c.dims[0]))));
    if (d * d != c.dims[0])
      throw std::invalid_argument(
          "mixed_channel_schmidt: channel space is not two equal qudits");
    four_dims = {d, d, d, d};
  } else {
    throw std::invalid_argument(
        "mixed_channel_schmidt: unsupported Choi layout");
  }

  const EigResult eig = hermitian_eig(c.matrix);
  MixedCutAnalysis out;
  for (std::size_t j = eig.eigenvalues.size(); j-- > 0;) {
    const double weight = eig.eigenvalues[j];
    if (weight <= weight_cutoff) break;  // ascending order: rest are smaller
    std::vector<cplx> vec(c.matrix.rows());
    for (std::size_t i = 0; i < vec.size(); ++i)
      vec[i] = eig.eigenvectors(i, j);
    out.weights.push_back(weight);
    out.schmidt.push_back(
        bipartition_schmidt(PureState(std::move(vec), four_dims)));
  }
  return out;
}

}  // namespace qcd
