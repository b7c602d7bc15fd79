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

#include "orthoinv/linalg.hpp"

#include <utility>

namespace orthoinv {
namespace {

// Eliminates below each pivot; returns pivot columns and leaves m in row
// echelon form. `sign` tracks row swaps for the determinant.
std::vector<std::size_t> eliminate(const PrimeField& f, FieldMatrix& m, bool* odd_swaps) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  bool swaps = false;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      auto a = m.row(p);
      auto b = m.row(r);
      std::swap_ranges(a.begin() + c, a.end(), b.begin() + c);
      swaps = !swaps;
    }
    const FieldElement inv = f.inv(m(r, c));
    auto pivot_row = m.row(r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const FieldElement entry = m(i, c);
      if (f.is_zero(entry)) continue;
      const FieldElement factor = f.mul(entry, inv);
      auto target = m.row(i);
      target[c] = f.zero();
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        if (!f.is_zero(pivot_row[j])) target[j] = f.sub_mul(target[j], factor, pivot_row[j]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  if (odd_swaps != nullptr) *odd_swaps = swaps;
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(const PrimeField& field, FieldMatrix m) {
  return eliminate(field, m, nullptr).size();
}

std::vector<std::size_t> pivot_columns(const PrimeField& field, FieldMatrix m) {
  return eliminate(field, m, nullptr);
}

FieldElement determinant(const PrimeField& field, FieldMatrix m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  bool odd = false;
  auto pivots = eliminate(field, m, &odd);
  if (pivots.size() < m.rows()) return field.zero();
  FieldElement d = field.one();
  for (std::size_t i = 0; i < m.rows(); ++i) d = field.mul(d, m(i, i));
  return odd ? field.neg(d) : d;
}

std::optional<FieldMatrix> inverse(const PrimeField& f, const FieldMatrix& m) {
  if (!m.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FieldMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = f.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && f.is_zero(a(p, c))) ++p;
    if (p == n) return std::nullopt;
    if (p != c) std::swap_ranges(a.row(p).begin(), a.row(p).end(), a.row(c).begin());
    const FieldElement inv = f.inv(a(c, c));
    for (auto& v : a.row(c)) v = f.mul(v, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || f.is_zero(a(i, c))) continue;
      const FieldElement factor = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) = f.sub_mul(a(i, j), factor, a(c, j));
    }
  }
  FieldMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
  return out;
}

void EchelonBasis::reduce(std::vector<FieldElement>& v) const {
  // Rows are fully reduced (each vanishes at every other pivot), so one pass
  // clears every pivot position of v.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const FieldElement coeff = v[pivots_[k]];
    if (field_->is_zero(coeff)) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < length_; ++j) {
      if (!field_->is_zero(row[j])) v[j] = field_->sub_mul(v[j], coeff, row[j]);
    }
  }
}

bool EchelonBasis::insert(std::vector<FieldElement> v) {
  if (v.size() != length_) throw DimensionError("echelon basis vector length");
  reduce(v);
  std::size_t p = 0;
  while (p < length_ && field_->is_zero(v[p])) ++p;
  if (p == length_) return false;
  const FieldElement inv = field_->inv(v[p]);
  for (std::size_t j = p; j < length_; ++j) v[j] = field_->mul(v[j], inv);
  // Keep earlier rows reduced at the new pivot so the single pass stays valid.
  for (auto& row : rows_) {
    const FieldElement coeff = row[p];
    if (field_->is_zero(coeff)) continue;
    for (std::size_t j = p; j < length_; ++j) {
      if (!field_->is_zero(v[j])) row[j] = field_->sub_mul(row[j], coeff, v[j]);
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(std::vector<FieldElement> v) const {
  if (v.size() != length_) throw DimensionError("echelon basis vector length");
  reduce(v);
  for (const auto& e : v) {
    if (!field_->is_zero(e)) return false;
  }
  return true;
}

}  // namespace orthoinv
