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
#include <vector>

#include "orthoinv/error.hpp"
#include "orthoinv/expression.hpp"
#include "orthoinv/matrix.hpp"
#include "orthoinv/sample.hpp"

namespace orthoinv {

/// Product of x/y per letter, left to right.
template <class Ring>
RingMatrix<Ring> evaluate_word(const Ring& ring, const Word& w, const RingMatrix<Ring>& x,
                               const RingMatrix<Ring>& y) {
  const auto& l = w.letters();
  RingMatrix<Ring> acc = l[0] == Letter::kX ? x : y;
  for (std::size_t i = 1; i < l.size(); ++i) acc = multiply(ring, acc, l[i] == Letter::kX ? x : y);
  return acc;
}

/// tr w(x, y); the last product is folded into the trace.
template <class Ring>
typename Ring::value_type trace_of_word(const Ring& ring, const Word& w, const RingMatrix<Ring>& x,
                                        const RingMatrix<Ring>& y) {
  const auto& l = w.letters();
  if (l.size() == 1) return trace(ring, l[0] == Letter::kX ? x : y);
  RingMatrix<Ring> acc = l[0] == Letter::kX ? x : y;
  for (std::size_t i = 1; i + 1 < l.size(); ++i) acc = multiply(ring, acc, l[i] == Letter::kX ? x : y);
  return trace_of_product(ring, acc, l.back() == Letter::kX ? x : y);
}

template <class Ring>
RingMatrix<Ring> evaluate_matrix_expression(const Ring& ring, const MatrixExpression& e,
                                            const RingMatrix<Ring>& x, const RingMatrix<Ring>& y) {
  RingMatrix<Ring> out(x.rows(), x.cols());
  for (const auto& t : e.terms()) {
    const auto c = ring.embed(ring.base().from_int(t.coefficient));
    out = add(ring, out, scale(ring, c, evaluate_word(ring, t.word, x, y)));
  }
  return out;
}

namespace detail {

template <class Ring>
typename Ring::value_type pfaffian_expand(const Ring& ring, const RingMatrix<Ring>& m,
                                          std::vector<std::size_t>& idx) {
  if (idx.empty()) return ring.one();
  const std::size_t first = idx[0];
  auto total = ring.zero();
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const auto entry = m(first, idx[k]);
    if (ring.is_zero(entry)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t j = 1; j < idx.size(); ++j) {
      if (j != k) rest.push_back(idx[j]);
    }
    const auto term = ring.mul(entry, pfaffian_expand(ring, m, rest));
    total = (k % 2 == 1) ? ring.add(total, term) : ring.sub(total, term);
  }
  return total;
}

}  // namespace detail

/// Pfaffian of an even-order skew-symmetric matrix by expansion along the
/// first row; pf of the 0x0 matrix is 1. Throws DomainError for odd order or
/// non-skew input.
template <class Ring>
typename Ring::value_type pfaffian(const Ring& ring, const RingMatrix<Ring>& m) {
  if (!m.square()) throw DimensionError("pfaffian of a non-square matrix");
  if (m.rows() % 2 != 0) throw DomainError("pfaffian of odd order " + std::to_string(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.rows(); ++j) {
      if (!ring.is_zero(ring.add(m(i, j), m(j, i)))) throw DomainError("pfaffian of a non-skew matrix");
    }
  }
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_expand(ring, m, idx);
}

/// Pf m = pf(m - m^T).
template <class Ring>
typename Ring::value_type cap_pf(const Ring& ring, const RingMatrix<Ring>& m) {
  if (m.rows() % 2 != 0) throw DomainError("Pf requires even order, got " + std::to_string(m.rows()));
  return pfaffian(ring, subtract(ring, m, transpose(m)));
}

/// st-coefficient of Pf(s m1 + t m2). Only 4x4, where Pf is quadratic and
/// the coefficient is Pf(m1 + m2) - Pf(m1) - Pf(m2).
template <class Ring>
typename Ring::value_type polarized_pf(const Ring& ring, const RingMatrix<Ring>& m1,
                                       const RingMatrix<Ring>& m2) {
  if (m1.rows() != 4 || m2.rows() != 4) {
    throw DomainError("polarized pfaffian is defined for 4x4 matrices only");
  }
  return ring.sub(ring.sub(cap_pf(ring, add(ring, m1, m2)), cap_pf(ring, m1)), cap_pf(ring, m2));
}

template <class Ring>
typename Ring::value_type evaluate_atom(const Ring& ring, const InvariantAtom& a, const RingMatrix<Ring>& x,
                                        const RingMatrix<Ring>& y) {
  switch (a.kind) {
    case AtomKind::kTrace:
      return trace_of_word(ring, a.args[0].terms()[0].word, x, y);
    case AtomKind::kPf:
      return cap_pf(ring, evaluate_matrix_expression(ring, a.args[0], x, y));
    case AtomKind::kPl:
    default:
      return polarized_pf(ring, evaluate_matrix_expression(ring, a.args[0], x, y),
                          evaluate_matrix_expression(ring, a.args[1], x, y));
  }
}

/// Rational coefficients are mapped into F_p; a denominator divisible by p
/// raises DomainError.
template <class Ring>
typename Ring::value_type evaluate_invariant(const Ring& ring, const InvariantExpression& inv,
                                             const RingMatrix<Ring>& x, const RingMatrix<Ring>& y) {
  auto total = ring.zero();
  for (const auto& a : inv.atoms()) {
    const auto c = ring.embed(ring.base().from_ratio(a.coefficient.numerator(), a.coefficient.denominator()));
    total = ring.add(total, ring.mul(c, evaluate_atom(ring, a, x, y)));
  }
  return total;
}

inline FieldMatrix evaluate_matrix_expression(const PrimeField& f, const MatrixExpression& e,
                                              const SamplePoint& pt) {
  return evaluate_matrix_expression(f, e, pt.x, pt.y);
}

inline FieldElement cap_pf(const PrimeField& f, const MatrixExpression& e, const SamplePoint& pt) {
  return cap_pf(f, evaluate_matrix_expression(f, e, pt.x, pt.y));
}

inline FieldElement polarized_pf(const PrimeField& f, const MatrixExpression& e1,
                                 const MatrixExpression& e2, const SamplePoint& pt) {
  return polarized_pf(f, evaluate_matrix_expression(f, e1, pt.x, pt.y),
                      evaluate_matrix_expression(f, e2, pt.x, pt.y));
}

inline FieldElement evaluate_invariant(const PrimeField& f, const InvariantExpression& inv,
                                       const SamplePoint& pt) {
  return evaluate_invariant(f, inv, pt.x, pt.y);
}

}  // namespace orthoinv
