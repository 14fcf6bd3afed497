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

#include "qcd/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcd {

namespace {

// Off-diagonal Frobenius norm target for the Jacobi sweeps.
constexpr double kJacobiOffTol = 1e-12;
constexpr int kMaxSweeps = 64;

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

// Big-endian digit decomposition of a flat index.
void to_digits(std::size_t flat, const std::vector<std::size_t>& dims,
               std::vector<std::size_t>& digits) {
  digits.resize(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = flat % dims[k];
    flat /= dims[k];
  }
}

std::size_t from_digits(const std::vector<std::size_t>& digits,
                        const std::vector<std::size_t>& dims) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + digits[k];
  return flat;
}

// Small-angle complex Jacobi rotation that zeroes the (p,q) entry of the
// Hermitian 2x2 block [[alpha, beta], [conj(beta), gamma]]. Returns
// {c, s, phase} for J = [[c, -s*phase], [s*conj(phase), c]].
struct Rotation {
  double c;
  double s;
  cplx phase;
};

Rotation make_rotation(double alpha, double gamma, cplx beta) {
  const double abs_beta = std::abs(beta);
  const cplx phase = beta / abs_beta;
  const double tau = (gamma - alpha) / (2.0 * abs_beta);
  // Smaller-magnitude root of t^2 - 2 tau t - 1 = 0, the tangent that zeroes
  // the rotated off-diagonal entry.
  const double t = tau >= 0.0 ? -1.0 / (tau + std::hypot(tau, 1.0))
                              : 1.0 / (-tau + std::hypot(tau, 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return Rotation{c, t * c, phase};
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

PureState::PureState(std::vector<cplx> amps, std::vector<std::size_t> ds)
    : amplitudes(std::move(amps)), dims(std::move(ds)) {
  if (dims.empty() || product(dims) != amplitudes.size())
    throw std::invalid_argument("PureState: dims do not match amplitude count");
  double n2 = 0.0;
  for (const auto& a : amplitudes) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > 1e-12)
    throw std::invalid_argument("PureState: state not normalized");
}

double PureState::norm() const {
  double n2 = 0.0;
  for (const auto& a : amplitudes) n2 += std::norm(a);
  return std::sqrt(n2);
}

ComplexMatrix PureState::projector() const {
  const std::size_t n = dim();
  ComplexMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return p;
}

Bipartition::Bipartition(std::vector<std::size_t> left_indices,
                         std::size_t n_subsystems)
    : left(std::move(left_indices)) {
  std::sort(left.begin(), left.end());
  if (std::adjacent_find(left.begin(), left.end()) != left.end())
    throw std::invalid_argument("Bipartition: duplicate index");
  if (!left.empty() && left.back() >= n_subsystems)
    throw std::invalid_argument("Bipartition: index out of range");
  for (std::size_t k = 0; k < n_subsystems; ++k)
    if (!std::binary_search(left.begin(), left.end(), k)) right.push_back(k);
  if (left.empty() || right.empty())
    throw std::invalid_argument("Bipartition: a side is empty");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx f = a(ia, ja);
      if (f == 0.0) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          m(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
    }
  return m;
}

PureState max_entangled(std::size_t d) {
  if (d < 2) throw std::invalid_argument("max_entangled: dimension must be >= 2");
  std::vector<cplx> amps(d * d, 0.0);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t k = 0; k < d; ++k) amps[k * d + k] = w;
  return PureState(std::move(amps), {d, d});
}

ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                const std::vector<std::size_t>& dims,
                                std::size_t subsystem) {
  const std::size_t n = product(dims);
  if (!m.is_square() || m.rows() != n)
    throw std::invalid_argument("partial_transpose: size does not match dims");
  if (subsystem >= dims.size())
    throw std::invalid_argument("partial_transpose: subsystem out of range");

  ComplexMatrix out(n, n);
  std::vector<std::size_t> rd, cd;
  for (std::size_t r = 0; r < n; ++r) {
    to_digits(r, dims, rd);
    for (std::size_t c = 0; c < n; ++c) {
      to_digits(c, dims, cd);
      std::swap(rd[subsystem], cd[subsystem]);
      out(from_digits(rd, dims), from_digits(cd, dims)) = m(r, c);
      std::swap(rd[subsystem], cd[subsystem]);
    }
  }
  return out;
}

PureState permute_subsystems(const PureState& v,
                             const std::vector<std::size_t>& perm) {
  const std::size_t n = v.dims.size();
  if (perm.size() != n)
    throw std::invalid_argument("permute_subsystems: permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p])
      throw std::invalid_argument("permute_subsystems: not a permutation");
    seen[p] = true;
  }

  std::vector<std::size_t> new_dims(n);
  for (std::size_t j = 0; j < n; ++j) new_dims[j] = v.dims[perm[j]];

  std::vector<cplx> out(v.amplitudes.size());
  std::vector<std::size_t> digits, new_digits(n);
  for (std::size_t flat = 0; flat < v.amplitudes.size(); ++flat) {
    to_digits(flat, v.dims, digits);
    for (std::size_t j = 0; j < n; ++j) new_digits[j] = digits[perm[j]];
    out[from_digits(new_digits, new_dims)] = v.amplitudes[flat];
  }
  return PureState(std::move(out), std::move(new_dims));
}

EigResult hermitian_eig(const ComplexMatrix& m, double hermitian_tol) {
  if (!m.is_square()) throw std::invalid_argument("hermitian_eig: matrix not square");
  if (!m.is_hermitian(hermitian_tol))
    throw std::invalid_argument("hermitian_eig: matrix not Hermitian");

  const std::size_t n = m.rows();
  // Work on the Hermitian part so representation noise below the tolerance
  // cannot leak into complex eigenvalues.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kJacobiOffTol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const Rotation r = make_rotation(alpha, gamma, a(p, q));
        const double abs_beta = std::abs(a(p, q));

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = r.c * akp + r.s * std::conj(r.phase) * akq;
          a(k, q) = -r.s * r.phase * akp + r.c * akq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = alpha * r.c * r.c + 2.0 * abs_beta * r.c * r.s +
                  gamma * r.s * r.s;
        a(q, q) = alpha * r.s * r.s - 2.0 * abs_beta * r.c * r.s +
                  gamma * r.c * r.c;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = r.c * vkp + r.s * std::conj(r.phase) * vkq;
          v(k, q) = -r.s * r.phase * vkp + r.c * vkq;
        }
      }
    }
  }
  if (off_diagonal_norm(a) > kJacobiOffTol * std::max(1.0, a.frobenius_norm()))
    throw std::runtime_error("hermitian_eig: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    result.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i)
      result.eigenvectors(i, j) = v(i, order[j]);
  }
  return result;
}

std::vector<double> schmidt_coefficients(const PureState& v,
                                         const Bipartition& cut) {
  if (cut.n_subsystems() != v.dims.size())
    throw std::invalid_argument("schmidt_coefficients: cut does not match state");

  std::size_t dl = 1, dr = 1;
  for (std::size_t k : cut.left) dl *= v.dims[k];
  for (std::size_t k : cut.right) dr *= v.dims[k];

  // Reshape with the left block first. Work with the tall orientation so
  // one-sided Jacobi orthogonalizes the short list of columns.
  const bool tall = dl >= dr;
  ComplexMatrix w(tall ? dl : dr, tall ? dr : dl);
  std::vector<std::size_t> digits;
  for (std::size_t flat = 0; flat < v.amplitudes.size(); ++flat) {
    to_digits(flat, v.dims, digits);
    std::size_t l = 0, r = 0;
    for (std::size_t k : cut.left) l = l * v.dims[k] + digits[k];
    for (std::size_t k : cut.right) r = r * v.dims[k] + digits[k];
    if (tall)
      w(l, r) = v.amplitudes[flat];
    else
      w(r, l) = std::conj(v.amplitudes[flat]);
  }

  // One-sided Jacobi: rotate column pairs until all are mutually orthogonal.
  // Singular values come out as column norms, so exact zeros survive instead
  // of being inflated to sqrt(eps) as a Gram-matrix route would do.
  const std::size_t nc = w.cols();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < nc; ++i) {
      for (std::size_t j = i + 1; j < nc; ++j) {
        double a = 0.0, b = 0.0;
        cplx g = 0.0;
        for (std::size_t k = 0; k < w.rows(); ++k) {
          a += std::norm(w(k, i));
          b += std::norm(w(k, j));
          g += std::conj(w(k, i)) * w(k, j);
        }
        if (std::abs(g) <= 1e-14 * std::sqrt(a * b) || std::abs(g) == 0.0)
          continue;
        rotated = true;
        const Rotation r = make_rotation(a, b, g);
        for (std::size_t k = 0; k < w.rows(); ++k) {
          const cplx wi = w(k, i);
          const cplx wj = w(k, j);
          w(k, i) = r.c * wi + r.s * std::conj(r.phase) * wj;
          w(k, j) = -r.s * r.phase * wi + r.c * wj;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(nc);
  for (std::size_t j = 0; j < nc; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < w.rows(); ++k) s += std::norm(w(k, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  const std::size_t n = product(dims);
  if (!m.is_square() || m.rows() != n)
    throw std::invalid_argument("partial_trace: size does not match dims");

  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw std::invalid_argument("partial_trace: duplicate subsystem index");
  for (std::size_t k : kept)
    if (k >= dims.size())
      throw std::invalid_argument("partial_trace: subsystem out of range");

  std::vector<std::size_t> out_dims;
  for (std::size_t k : kept) out_dims.push_back(dims[k]);
  const std::size_t out_n = product(out_dims);
  ComplexMatrix out(out_n, out_n);

  std::vector<std::size_t> rd, cd;
  for (std::size_t r = 0; r < n; ++r) {
    to_digits(r, dims, rd);
    for (std::size_t c = 0; c < n; ++c) {
      to_digits(c, dims, cd);
      bool diagonal_on_traced = true;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (std::binary_search(kept.begin(), kept.end(), k)) continue;
        if (rd[k] != cd[k]) {
          diagonal_on_traced = false;
          break;
        }
      }
      if (!diagonal_on_traced) continue;
      std::size_t ro = 0, co = 0;
      for (std::size_t k : kept) {
        ro = ro * dims[k] + rd[k];
        co = co * dims[k] + cd[k];
      }
      out(ro, co) += m(r, c);
    }
  }
  return out;
}

}  // namespace qcd
