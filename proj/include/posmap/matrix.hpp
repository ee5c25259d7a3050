// Copyright 2026 The posmap Authors
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

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "posmap/errors.hpp"

namespace posmap {

using Complex = std::complex<double>;

/**
 * Dense square complex matrix, row-major.
 *
 * This is the carrier for every algebra element (M_k(C)), every block
 * matrix once assembled, and every map value. Scalars are 1x1 matrices.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim)
      : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

  ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_)
      throw DimensionError("entries array must have dim^2 elements");
  }

  /// Nested row lists; every row must have as many entries as there are rows.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& r : rows) {
      if (r.size() != dim_) throw DimensionError("matrix is not square");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static ComplexMatrix zeros(std::size_t dim) { return ComplexMatrix(dim); }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix scalar(Complex z) { return ComplexMatrix(1, {z}); }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }
  static ComplexMatrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * dim_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  /// Value of a 1x1 matrix.
  Complex value() const {
    if (dim_ != 1) throw DimensionError("value() requires a 1x1 matrix");
    return data_[0];
  }

  bool all_finite() const {
    for (const auto& z : data_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  /// (M + M*) / 2
  ComplexMatrix hermitian_part() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return r;
  }

  Complex trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double fro_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    a.require_same(b);
    const std::size_t n = a.dim_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        const Complex ail = a(i, l);
        if (ail == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += ail * b(l, j);
      }
    return r;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.dim_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.dim_; ++j) os << (j ? ", " : "") << m(i, j);
    }
    return os << ']';
  }

 private:
  void require_same(const ComplexMatrix& o) const {
    if (o.dim_ != dim_)
      throw DimensionError("dimension mismatch: " + std::to_string(dim_) +
                           " vs " + std::to_string(o.dim_));
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

inline double fro_norm(const ComplexMatrix& a) { return a.fro_norm(); }

inline double fro_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).fro_norm();
}

/// Kronecker product a (x) b.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim(), k = b.dim();
  ComplexMatrix r(n * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) r(i * k + p, j * k + q) = a(i, j) * b(p, q);
  return r;
}

}  // namespace posmap
