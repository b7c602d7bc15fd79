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

// Independent reference computations. They share no code with the library
// beyond field arithmetic.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "orthoinv/field.hpp"
#include "orthoinv/linalg.hpp"

namespace orthoinv::testing {

// Leibniz sum over all permutations.
inline FieldElement oracle_determinant(const PrimeField& f, const FieldMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement total = f.zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    FieldElement term = f.one();
    for (std::size_t i = 0; i < perm.size(); ++i) term = f.mul(term, m(i, perm[i]));
    total = inversions % 2 == 0 ? f.add(total, term) : f.sub(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// pf of a 4x4 skew matrix: a01 a23 - a02 a13 + a03 a12.
inline FieldElement oracle_pf4(const PrimeField& f, const FieldMatrix& a) {
  return f.add(f.sub(f.mul(a(0, 1), a(2, 3)), f.mul(a(0, 2), a(1, 3))), f.mul(a(0, 3), a(1, 2)));
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix int_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline IntMatrix int_transpose(const IntMatrix& a) {
  IntMatrix t(a[0].size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Trace of a word given as a string of 'x' and 'y', over the integers.
inline std::int64_t int_trace_word(const std::string& word, const IntMatrix& x, const IntMatrix& y) {
  IntMatrix acc = word[0] == 'x' ? x : y;
  for (std::size_t i = 1; i < word.size(); ++i) acc = int_product(acc, word[i] == 'x' ? x : y);
  std::int64_t t = 0;
  for (std::size_t i = 0; i < acc.size(); ++i) t += acc[i][i];
  return t;
}

// Coefficients 0..cap of sum_k num[k] t^k / prod (1 - t^d), counting the
// solutions of sum e_i d_i = m by dynamic programming over the parts.
inline std::vector<std::int64_t> oracle_series(const std::vector<std::int64_t>& numerator,
                                               const std::vector<int>& denominator, int cap) {
  std::vector<std::int64_t> partitions(cap + 1, 0);
  partitions[0] = 1;
  for (int d : denominator)
    for (int m = d; m <= cap; ++m) partitions[m] += partitions[m - d];
  std::vector<std::int64_t> out(cap + 1, 0);
  for (std::size_t k = 0; k < numerator.size(); ++k)
    for (int m = static_cast<int>(k); m <= cap; ++m) out[m] += numerator[k] * partitions[m - k];
  return out;
}

}  // namespace orthoinv::testing
