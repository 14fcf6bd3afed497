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

#include "qcd/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcd/rng.hpp"

namespace qcd {

namespace {

constexpr double kDropTol = 1e-12;

// P|j> = phase(j) |j ^ flip_mask>. X and Y flip the bit; Y and Z pick up
// bit-dependent phases (Y|0> = i|1>, Y|1> = -i|0>, Z|b> = (-1)^b |b>).
struct SparsePauli {
  std::size_t flip_mask = 0;
  std::vector<std::pair<std::size_t, cplx>> z_y_bits;  // (bit, base phase)

  explicit SparsePauli(const PauliString& p) {
    const std::size_t n = p.letters.size();
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = std::size_t{1} << (n - 1 - q);
      switch (p.letters[q]) {
        case Pauli::I:
          break;
        case Pauli::X:
          flip_mask |= bit;
          break;
        case Pauli::Y:
          flip_mask |= bit;
          z_y_bits.emplace_back(bit, cplx(0.0, 1.0));
          break;
        case Pauli::Z:
          z_y_bits.emplace_back(bit, cplx(1.0, 0.0));
          break;
      }
    }
  }

  cplx phase(std::size_t j) const {
    cplx ph = 1.0;
    for (const auto& [bit, base] : z_y_bits)
      ph *= (j & bit) ? -base : base;
    return ph;
  }

  // Tr[m P] = sum_j m(j, j ^ flip_mask) * phase(j).
  cplx trace_with(const ComplexMatrix& m) const {
    cplx t = 0.0;
    for (std::size_t j = 0; j < m.rows(); ++j)
      t += m(j, j ^ flip_mask) * phase(j);
    return t;
  }
};

PauliString string_from_code(std::size_t code, std::size_t n_qubits) {
  PauliString p;
  p.letters.resize(n_qubits);
  for (std::size_t q = n_qubits; q-- > 0;) {
    p.letters[q] = static_cast<Pauli>(code & 3);
    code >>= 2;
  }
  return p;
}

}  // namespace

std::string PauliString::name() const {
  static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  s.reserve(letters.size());
  for (Pauli l : letters) s.push_back(kNames[static_cast<int>(l)]);
  return s;
}

bool PauliString::is_identity() const {
  return std::all_of(letters.begin(), letters.end(),
                     [](Pauli l) { return l == Pauli::I; });
}

ComplexMatrix PauliString::matrix() const {
  const std::size_t dim = std::size_t{1} << letters.size();
  const SparsePauli sp(*this);
  ComplexMatrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m(j ^ sp.flip_mask, j) = sp.phase(j);
  return m;
}

PauliDecomposition pauli_decompose(const ComplexMatrix& w,
                                   std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (!w.is_square() || w.rows() != dim)
    throw std::invalid_argument(
        "pauli_decompose: dimension does not match qubit count");
  if (!w.is_hermitian(1e-10))
    throw std::invalid_argument("pauli_decompose: operator not Hermitian");

  PauliDecomposition decomp;
  decomp.n_qubits = n_qubits;
  const std::size_t n_strings = std::size_t{1} << (2 * n_qubits);
  for (std::size_t code = 0; code < n_strings; ++code) {
    PauliString str = string_from_code(code, n_qubits);
    const cplx t = SparsePauli(str).trace_with(w);
    const double coeff = t.real() / static_cast<double>(dim);
    if (std::abs(t.imag()) > 1e-10 * static_cast<double>(dim))
      throw std::invalid_argument(
          "pauli_decompose: complex coefficient from non-Hermitian input");
    if (std::abs(coeff) < kDropTol) continue;
    decomp.terms.push_back({coeff, std::move(str)});
  }
  return decomp;
}

ComplexMatrix reconstruct(const PauliDecomposition& decomp) {
  const std::size_t dim = std::size_t{1} << decomp.n_qubits;
  ComplexMatrix m(dim, dim);
  for (const auto& term : decomp.terms) {
    const SparsePauli sp(term.string);
    for (std::size_t j = 0; j < dim; ++j)
      m(j ^ sp.flip_mask, j) += term.coeff * sp.phase(j);
  }
  return m;
}

double exact_expectation(const ComplexMatrix& w, const ComplexMatrix& state) {
  if (!w.is_square() || !state.is_square() || w.rows() != state.rows())
    throw std::invalid_argument("exact_expectation: dimension mismatch");
  cplx t = 0.0;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t k = 0; k < w.cols(); ++k) t += w(i, k) * state(k, i);
  if (std::abs(t.imag()) > 1e-10)
    throw std::invalid_argument(
        "exact_expectation: trace has a non-negligible imaginary part");
  return t.real();
}

ShotEstimate simulate_shots(const PauliDecomposition& decomp,
                            const ComplexMatrix& state,
                            std::size_t shots_per_term, std::uint64_t seed) {
  const std::size_t dim = std::size_t{1} << decomp.n_qubits;
  if (!state.is_square() || state.rows() != dim)
    throw std::invalid_argument("simulate_shots: state dimension mismatch");
  if (shots_per_term < 1)
    throw std::invalid_argument("simulate_shots: need at least one shot");

  double estimate = 0.0;
  double variance = 0.0;
  for (std::size_t k = 0; k < decomp.terms.size(); ++k) {
    const auto& term = decomp.terms[k];
    if (term.string.is_identity()) {
      estimate += term.coeff;  // exact, no shots spent
      continue;
    }
    const cplx ev_c = SparsePauli(term.string).trace_with(state);
    const double ev = std::clamp(ev_c.real(), -1.0, 1.0);
    const double p_plus = 0.5 * (1.0 + ev);

    Rng rng(Rng::derive(seed, k));
    std::size_t plus = 0;
    for (std::size_t shot = 0; shot < shots_per_term; ++shot)
      if (rng.uniform01() < p_plus) ++plus;

    const double n = static_cast<double>(shots_per_term);
    const double mean = (2.0 * static_cast<double>(plus) - n) / n;
    // Sample variance of +-1 outcomes is n (1 - mean^2) / (n - 1).
    const double sample_var =
        shots_per_term > 1 ? (1.0 - mean * mean) * n / (n - 1.0) : 0.0;
    estimate += term.coeff * mean;
    variance += term.coeff * term.coeff * sample_var / n;
  }
  return ShotEstimate{estimate, std::sqrt(variance), shots_per_term, seed};
}

Verdict detection_decision(const ShotEstimate& est, double k_sigma) {
  if (k_sigma <= 0.0)
    throw std::invalid_argument("detection_decision: k_sigma must be positive");
  const double margin = k_sigma * est.std_error;
  return Verdict{est.estimate + margin < 0.0, est.estimate, margin, {}};
}

}  // namespace qcd
