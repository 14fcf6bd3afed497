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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcd {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage. All operators in this library
/// live on spaces of total dimension <= 64, so everything is plain O(n^3)
/// dense arithmetic.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  /// Row-by-row construction, mostly for literals in gate tables and tests.
  /// Throws std::invalid_argument on ragged rows.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cplx>& data() const { return data_; }

  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix adjoint() const;

  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  /// Entrywise M = M^dagger within `tol` on the max-norm.
  bool is_hermitian(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(const cplx& scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, const cplx& s) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(const cplx& s, ComplexMatrix a) {
    a *= s;
    return a;
  }

  ComplexMatrix operator*(const ComplexMatrix& other) const;
  std::vector<cplx> operator*(const std::vector<cplx>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// max |a_ij - b_ij|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qcd
