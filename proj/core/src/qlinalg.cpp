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

#include "telematch/qlinalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "telematch/errors.hpp"

namespace telematch {
namespace {

bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_finite(std::span<const Complex> xs, const char* what) {
  if (!std::all_of(xs.begin(), xs.end(), finite)) {
    throw InvalidValue(std::string(what) + ": non-finite entry");
  }
}

}  // namespace

CVector::CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0 || n > kMaxDimension || !std::has_single_bit(n)) {
    throw InvalidValue("CVector: dimension must be a power of two in [1, 16], got " +
                       std::to_string(n));
  }
  require_finite(entries_, "CVector");
}

CVector::CVector(std::initializer_list<Complex> entries)
    : CVector(std::vector<Complex>(entries)) {}

CVector CVector::zeros(std::size_t dim) {
  return CVector(std::vector<Complex>(dim));
}

CVector CVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidValue("CVector::basis: index out of range");
  std::vector<Complex> e(dim);
  e[index] = 1.0;
  return CVector(std::move(e));
}

double CVector::norm_sq() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return s;
}

double CVector::norm() const { return std::sqrt(norm_sq()); }

bool CVector::is_normalized(double tol) const {
  return std::abs(norm_sq() - 1.0) <= tol;
}

CVector CVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidValue("CVector::normalized: zero vector");
  return scaled(1.0 / n);
}

CVector CVector::scaled(Complex factor) const {
  std::vector<Complex> out(entries_);
  for (auto& z : out) z *= factor;
  return CVector(std::move(out));
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0 || entries_.size() != rows_ * cols_) {
    throw InvalidValue("CMatrix: entry count does not match shape");
  }
  require_finite(entries_, "CMatrix");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols,
                 std::initializer_list<Complex> entries)
    : CMatrix(rows, cols, std::vector<Complex>(entries)) {}

CMatrix CMatrix::identity(std::size_t n) {
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return CMatrix(n, n, std::move(e));
}

CMatrix CMatrix::zeros(std::size_t rows, std::size_t cols) {
  return CMatrix(rows, cols, std::vector<Complex>(rows * cols));
}

CMatrix CMatrix::diag(std::span<const Complex> d) {
  const std::size_t n = d.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = d[i];
  return CMatrix(n, n, std::move(e));
}

CMatrix CMatrix::scaled(Complex factor) const {
  std::vector<Complex> out(entries_);
  for (auto& z : out) z *= factor;
  return CMatrix(rows_, cols_, std::move(out));
}

CVector tensor(const CVector& a, const CVector& b) {
  if (a.dim() * b.dim() > kMaxDimension) {
    throw DimensionMismatch("tensor: result exceeds 16 amplitudes");
  }
  std::vector<Complex> out;
  out.reserve(a.dim() * b.dim());
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) out.push_back(x * y);
  }
  return CVector(std::move(out));
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Complex> out(rows * cols);
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out[(ar * b.rows() + br) * cols + ac * b.cols() + bc] = s * b(br, bc);
        }
      }
    }
  }
  return CMatrix(rows, cols, std::move(out));
}

CMatrix adjoint(const CMatrix& m) {
  std::vector<Complex> out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[c * m.rows() + r] = std::conj(m(r, c));
    }
  }
  return CMatrix(m.cols(), m.rows(), std::move(out));
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: inner dimensions differ");
  }
  std::vector<Complex> out(a.rows() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(r, k) * b(k, c);
      out[r * b.cols() + c] = s;
    }
  }
  return CMatrix(a.rows(), b.cols(), std::move(out));
}

CVector apply(const CMatrix& m, const CVector& v) {
  if (m.cols() != v.dim()) {
    throw DimensionMismatch("apply: matrix has " + std::to_string(m.cols()) +
                            " columns, vector has dimension " +
                            std::to_string(v.dim()));
  }
  std::vector<Complex> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return CVector(std::move(out));
}

Complex inner(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner: dimensions differ");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Complex determinant2(const CMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw DimensionMismatch("determinant2: expected a 2x2 matrix");
  }
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

double max_abs_diff(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimensions differ");
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("max_abs_diff: shapes differ");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return d;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return max_abs_diff(multiply(m, adjoint(m)), CMatrix::identity(m.rows())) <= tol;
}

CMatrix pauli_x() { return CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
CMatrix pauli_y() { return CMatrix(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
CMatrix pauli_z() { return CMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

}  // namespace telematch
