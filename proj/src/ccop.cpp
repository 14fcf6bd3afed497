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

#include "qcd/ccop.hpp"

#include <cmath>

namespace qcd {

namespace {

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr[a b] for matching square shapes.
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t.real();
}

constexpr double kDegeneracyTol = 1e-9;

}  // namespace

std::pair<double, PureState> min_pt_eigenpair(const ChoiState& c) {
  if (c.dims.size() != 2)
    throw std::invalid_argument(
        "min_pt_eigenpair: expected the bipartite Choi of a single-qudit "
        "channel");
  const ComplexMatrix pt = compose_transpose_choi(c);
  const EigResult eig = hermitian_eig(pt);
  std::vector<cplx> vec(pt.rows());
  for (std::size_t i = 0; i < vec.size(); ++i) vec[i] = eig.eigenvectors(i, 0);
  return {eig.eigenvalues.front(), PureState(std::move(vec), c.dims)};
}

CcopWitness ccop_witness(const ChoiState& c, double tol) {
  auto [lambda, vec] = min_pt_eigenpair(c);
  if (lambda >= -tol)
    throw NoWitnessError(
        "ccop_witness: Choi state is PPT, no witness from this construction");
  ComplexMatrix w = partial_transpose(vec.projector(), c.dims, 0);
  return CcopWitness{std::move(w), lambda, std::move(vec)};
}

CcopDetection analyze_ccop(const KrausChannel& ch, double tol) {
  const ValidationReport report = validate(ch);
  if (!report.ok)
    throw std::invalid_argument("analyze_ccop: channel is not trace preserving");

  const ChoiState c = choi(ch);
  const ComplexMatrix pt = compose_transpose_choi(c);
  const EigResult eig = hermitian_eig(pt);
  const double lambda = eig.eigenvalues.front();

  CcopDetection out{Verdict{false, lambda, tol, {}}, lambda, std::nullopt};
  if (lambda >= -tol) {
    out.verdict.annotations.push_back(
        "Choi is PPT: not detectable as non-CCOP by this construction");
    return out;
  }

  std::vector<cplx> vec(pt.rows());
  for (std::size_t i = 0; i < vec.size(); ++i) vec[i] = eig.eigenvectors(i, 0);
  PureState eigvec(std::move(vec), c.dims);
  ComplexMatrix w = partial_transpose(eigvec.projector(), c.dims, 0);

  // Tr[P^T_A C] = Tr[P C^T_A] = lambda_min, so the measured expectation is
  // the bottom eigenvalue itself, independent of any degenerate eigenvector
  // choice.
  const double expectation = real_trace_product(w, c.matrix);
  out.verdict.detected = expectation < -tol;
  out.verdict.expectation = expectation;
  if (out.verdict.detected)
    out.verdict.annotations.push_back(
        "NPT Choi state: channel is also not entanglement breaking");
  if (eig.eigenvalues.size() > 1 &&
      eig.eigenvalues[1] - lambda < kDegeneracyTol)
    out.verdict.annotations.push_back(
        "most negative eigenvalue is degenerate: witness eigenvector is not "
        "unique");
  out.witness = CcopWitness{std::move(w), lambda, std::move(eigvec)};
  return out;
}

Verdict detect_non_ccop(const KrausChannel& ch, double tol) {
  return analyze_ccop(ch, tol).verdict;
}

}  // namespace qcd
