/*
 * Copyright 2026 The orthoinv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orthoinv/error.hpp"

namespace orthoinv {

/// Row-major dense matrix over a ring element type. A value-initialized T
/// must be the ring zero.
template <class T>
class DenseMatrix {
 public:
  using value_type = T;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) noexcept { return {entries_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const T> entries() const noexcept { return entries_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

template <class Ring>
using RingMatrix = DenseMatrix<typename Ring::value_type>;

template <class Ring>
RingMatrix<Ring> identity(const Ring& ring, std::size_t n) {
  RingMatrix<Ring> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

template <class Ring>
RingMatrix<Ring> multiply(const Ring& ring, const RingMatrix<Ring>& a, const RingMatrix<Ring>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product of " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  RingMatrix<Ring> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = ring.add(c(i, j), ring.mul(aik, b(k, j)));
    }
  }
  return c;
}

namespace detail {
template <class T>
void require_same_shape(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix shapes differ");
}
}  // namespace detail

template <class Ring>
RingMatrix<Ring> add(const Ring& ring, const RingMatrix<Ring>& a, const RingMatrix<Ring>& b) {
  detail::require_same_shape(a, b);
  RingMatrix<Ring> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.add(a(i, j), b(i, j));
  return c;
}

template <class Ring>
RingMatrix<Ring> subtract(const Ring& ring, const RingMatrix<Ring>& a, const RingMatrix<Ring>& b) {
  detail::require_same_shape(a, b);
  RingMatrix<Ring> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.sub(a(i, j), b(i, j));
  return c;
}

template <class Ring>
RingMatrix<Ring> scale(const Ring& ring, typename Ring::value_type s, const RingMatrix<Ring>& a) {
  RingMatrix<Ring> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.mul(s, a(i, j));
  return c;
}

template <class T>
DenseMatrix<T> transpose(const DenseMatrix<T>& a) {
  DenseMatrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class Ring>
typename Ring::value_type trace(const Ring& ring, const RingMatrix<Ring>& a) {
  if (!a.square()) throw DimensionError("trace of a non-square matrix");
  auto s = ring.zero();
  for (std::size_t i = 0; i < a.rows(); ++i) s = ring.add(s, a(i, i));
  return s;
}

/// Trace of a*b without forming the product.
template <class Ring>
typename Ring::value_type trace_of_product(const Ring& ring, const RingMatrix<Ring>& a,
                                           const RingMatrix<Ring>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionError("trace of product shapes");
  auto s = ring.zero();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) s = ring.add(s, ring.mul(a(i, k), b(k, i)));
  return s;
}

}  // namespace orthoinv
