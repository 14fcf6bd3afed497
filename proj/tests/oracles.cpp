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

#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <numeric>

#include "qcd/rng.hpp"

namespace qcd::oracle {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return e;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix m(static_cast<std::size_t>(e.rows()),
                  static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
  return m;
}

Eigen::MatrixXcd ginibre(std::size_t rows, std::size_t cols,
                         std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXcd g(rows, cols);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      g(i, j) = cplx(rng.gaussian(), rng.gaussian());
  return g;
}

}  // namespace

std::vector<double> eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  const Eigen::VectorXd vals = solver.eigenvalues();
  return {vals.data(), vals.data() + vals.size()};
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const Eigen::VectorXd vals = svd.singularValues();
  return {vals.data(), vals.data() + vals.size()};
}

std::vector<double> schmidt(const PureState& v, const Bipartition& cut) {
  std::size_t dl = 1, dr = 1;
  for (std::size_t k : cut.left) dl *= v.dims[k];
  for (std::size_t k : cut.right) dr *= v.dims[k];

  Eigen::MatrixXcd m(dl, dr);
  const std::size_t n = v.dims.size();
  for (std::size_t flat = 0; flat < v.amplitudes.size(); ++flat) {
    std::vector<std::size_t> digits(n);
    std::size_t rest = flat;
    for (std::size_t k = n; k-- > 0;) {
      digits[k] = rest % v.dims[k];
      rest /= v.dims[k];
    }
    std::size_t l = 0, r = 0;
    for (std::size_t k : cut.left) l = l * v.dims[k] + digits[k];
    for (std::size_t k : cut.right) r = r * v.dims[k] + digits[k];
    m(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(r)) =
        v.amplitudes[flat];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd vals = svd.singularValues();
  return {vals.data(), vals.data() + vals.size()};
}

ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                const std::vector<std::size_t>& dims,
                                std::size_t subsystem) {
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  const std::size_t n_sub = dims.size();
  auto digits_of = [&](std::size_t flat) {
    std::vector<std::size_t> d(n_sub);
    for (std::size_t k = n_sub; k-- > 0;) {
      d[k] = flat % dims[k];
      flat /= dims[k];
    }
    return d;
  };
  auto flat_of = [&](const std::vector<std::size_t>& d) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < n_sub; ++k) flat = flat * dims[k] + d[k];
    return flat;
  };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      auto rd = digits_of(r);
      auto cd = digits_of(c);
      std::swap(rd[subsystem], cd[subsystem]);
      out(flat_of(rd), flat_of(cd)) = m(r, c);
    }
  }
  return out;
}

ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed) {
  const Eigen::MatrixXcd g = ginibre(n, n, seed);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so Q follows the Haar measure.
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const cplx d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return from_eigen(q);
}

ComplexMatrix random_density(std::size_t n, std::uint64_t seed) {
  const Eigen::MatrixXcd g = ginibre(n, n, seed);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace();
  return from_eigen(rho);
}

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  const Eigen::MatrixXcd g = ginibre(n, n, seed);
  return from_eigen(Eigen::MatrixXcd(0.5 * (g + g.adjoint())));
}

KrausChannel random_channel(std::size_t d, std::size_t k, std::uint64_t seed) {
  // Orthonormalize d Gaussian columns in C^{dk}; splitting the resulting
  // isometry into k stacked d x d blocks gives Kraus operators with
  // sum K^dag K = I by construction.
  const Eigen::MatrixXcd g = ginibre(d * k, d, seed);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  const Eigen::MatrixXcd q =
      Eigen::MatrixXcd(qr.householderQ()).leftCols(static_cast<Eigen::Index>(d));

  std::vector<ComplexMatrix> ops;
  for (std::size_t block = 0; block < k; ++block) {
    ComplexMatrix op(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        op(i, j) = q(static_cast<Eigen::Index>(block * d + i),
                     static_cast<Eigen::Index>(j));
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops), d);
}

bool is_ppt(const ComplexMatrix& rho, const std::vector<std::size_t>& dims) {
  const std::vector<double> vals =
      eigenvalues(oracle::partial_transpose(rho, dims, 0));
  return vals.front() >= -1e-12;
}

}  // namespace qcd::oracle
