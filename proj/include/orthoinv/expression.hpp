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

#include <boost/rational.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthoinv/word.hpp"

namespace orthoinv {

using Rational = boost::rational<std::int64_t>;

struct WordTerm {
  std::int64_t coefficient = 0;
  Word word;

  friend auto operator<=>(const WordTerm& a, const WordTerm& b) {
    if (auto c = a.word <=> b.word; c != 0) return c;
    return a.coefficient <=> b.coefficient;
  }
  friend bool operator==(const WordTerm&, const WordTerm&) = default;
};

/// Integer combination of words, kept normalized: distinct words, nonzero
/// coefficients, ascending word order.
class MatrixExpression {
 public:
  MatrixExpression() = default;
  explicit MatrixExpression(const Word& w) : terms_{{1, w}} {}
  explicit MatrixExpression(std::vector<WordTerm> terms);

  const std::vector<WordTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_single_word() const noexcept { return terms_.size() == 1 && terms_[0].coefficient == 1; }

  /// Common length of all words, if there is one.
  std::optional<int> degree() const;
  /// Common bidegree of all words, if there is one.
  std::optional<Bidegree> bidegree() const;

  MatrixExpression operator+(const MatrixExpression& rhs) const;
  MatrixExpression operator-(const MatrixExpression& rhs) const;
  MatrixExpression operator*(const MatrixExpression& rhs) const;
  MatrixExpression scaled(std::int64_t k) const;

  /// e.g. "x^3 + x^2y", "2xy - yx".
  std::string to_string() const;

  friend auto operator<=>(const MatrixExpression&, const MatrixExpression&) = default;
  friend bool operator==(const MatrixExpression&, const MatrixExpression&) = default;

 private:
  std::vector<WordTerm> terms_;
};

/// mexpr := mterm (('+'|'-') mterm)* ; mterm := [uint] mfactor+ ;
/// mfactor := letter ('^' uint)? | '(' mexpr ')' ('^' uint)?
MatrixExpression parse_matrix_expression(std::string_view text);

enum class AtomKind { kTrace, kPf, kPl };

std::string_view to_string(AtomKind kind) noexcept;

/// coefficient * kind(args). Pf(M) = pf(M - M^T); pl(M1, M2) is the
/// st-coefficient of Pf(s M1 + t M2).
struct InvariantAtom {
  Rational coefficient;
  AtomKind kind = AtomKind::kTrace;
  std::vector<MatrixExpression> args;
};

/// Rational combination of trace, Pf and pl atoms. Trace atoms are split
/// into one atom per word; equal atoms are merged.
class InvariantExpression {
 public:
  InvariantExpression() = default;
  explicit InvariantExpression(std::vector<InvariantAtom> atoms);

  static InvariantExpression trace(const MatrixExpression& e);
  static InvariantExpression trace(const Word& w) { return trace(MatrixExpression(w)); }

  const std::vector<InvariantAtom>& atoms() const noexcept { return atoms_; }
  bool is_zero() const noexcept { return atoms_.empty(); }
  bool has_pfaffian_atoms() const noexcept;

  /// Degree in the matrix entries. A Pf atom over an argument of degree d has
  /// degree (order/2)*d; a pl atom has the sum of its argument degrees.
  /// nullopt when the atoms disagree or an argument is inhomogeneous.
  std::optional<int> total_degree(std::size_t order = 4) const;
  /// Defined only when every expanded word of every atom shares one bidegree
  /// pattern (e.g. not for Pf(x^3 + x^2y)).
  std::optional<Bidegree> bidegree(std::size_t order = 4) const;

  InvariantExpression operator+(const InvariantExpression& rhs) const;
  InvariantExpression scaled(Rational k) const;

  /// e.g. "tr(x^2) - 3/2 Pf(x^3 + x^2y)".
  std::string to_string() const;

  friend bool operator==(const InvariantExpression&, const InvariantExpression&);

 private:
  std::vector<InvariantAtom> atoms_;
};

/// inv := ['-'] term (('+'|'-') term)* ; term := [uint ['/' uint]] atom ;
/// atom := 'tr' '(' mexpr ')' | 'Pf' '(' mexpr ')' | 'pl' '(' mexpr ',' mexpr ')'
InvariantExpression parse_invariant(std::string_view text);

}  // namespace orthoinv
