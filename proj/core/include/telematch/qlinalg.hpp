// Copyright 2026 The telematch Authors
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

// Small dense complex linear algebra for states of at most four qubits.
//
// Index convention: in a tensor product the left operand owns the most
// significant bits, so for |q1 q2 q3> the amplitude index is 4*q1 + 2*q2 + q3.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace telematch {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kMaxDimension = 16;

class CVector {
 public:
  // Throws InvalidValue unless the dimension is a power of two in [1, 16]
  // and every entry is finite.
  explicit CVector(std::vector<Complex> entries);
  CVector(std::initializer_list<Complex> entries);

  static CVector zeros(std::size_t dim);
  static CVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  std::span<const Complex> entries() const { return entries_; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  double norm_sq() const;
  double norm() const;
  bool is_normalized(double tol = kDefaultTolerance) const;
  // Throws InvalidValue for the zero vector.
  CVector normalized() const;
  CVector scaled(Complex factor) const;

 private:
  std::vector<Complex> entries_;
};

class CMatrix {
 public:
  // Row-major entries. Throws InvalidValue on size mismatch or non-finite
  // entries.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  CMatrix(std::size_t rows, std::size_t cols,
          std::initializer_list<Complex> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols);
  static CMatrix diag(std::span<const Complex> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const Complex> entries() const { return entries_; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  CMatrix scaled(Complex factor) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

// Kronecker products.
CVector tensor(const CVector& a, const CVector& b);
CMatrix tensor(const CMatrix& a, const CMatrix& b);

CMatrix adjoint(const CMatrix& m);
CMatrix multiply(const CMatrix& a, const CMatrix& b);
// Throws DimensionMismatch when cols(m) != dim(v).
CVector apply(const CMatrix& m, const CVector& v);

// <a|b>, conjugate-linear in the first argument.
Complex inner(const CVector& a, const CVector& b);
Complex determinant2(const CMatrix& m);

double max_abs_diff(const CVector& a, const CVector& b);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// max |(M M^dagger - I)_{ij}| <= tol. Non-square matrices are never unitary.
bool is_unitary(const CMatrix& m, double tol = kDefaultTolerance);

// Pauli matrices.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

}  // namespace telematch
