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
#include <optional>
#include <vector>

#include "orthoinv/field.hpp"
#include "orthoinv/matrix.hpp"

namespace orthoinv {

using FieldMatrix = DenseMatrix<FieldElement>;

/// Rank over F_p by Gaussian elimination, sweeping columns left to right.
std::size_t rank_mod_p(const PrimeField& field, FieldMatrix m);

/// Pivot columns found by the left-to-right sweep. The number of pivots
/// below column k equals the rank of the first k columns.
std::vector<std::size_t> pivot_columns(const PrimeField& field, FieldMatrix m);

FieldElement determinant(const PrimeField& field, FieldMatrix m);

/// Gauss-Jordan inverse; nullopt for singular input.
std::optional<FieldMatrix> inverse(const PrimeField& field, const FieldMatrix& m);

/// Incrementally maintained echelon basis of vectors in F_p^length.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& field, std::size_t length) : field_(&field), length_(length) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t length() const noexcept { return length_; }

  /// Adds v when it is independent of the basis; returns whether it was.
  bool insert(std::vector<FieldElement> v);
  /// True when v lies in the span of the basis.
  bool contains(std::vector<FieldElement> v) const;

 private:
  void reduce(std::vector<FieldElement>& v) const;

  const PrimeField* field_;
  std::size_t length_;
  std::vector<std::vector<FieldElement>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace orthoinv
