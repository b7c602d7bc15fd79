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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthoinv/expression.hpp"
#include "orthoinv/field.hpp"
#include "orthoinv/sample.hpp"

namespace orthoinv {

enum class Grading { kTotal, kBigraded };

/// A degree in the set's grading. Total grading stores (d, 0).
using Grade = Bidegree;

std::string format_grade(Grade g, Grading grading);

struct Generator {
  std::string label;
  InvariantExpression expression;
  Grade grade;
};

/// Named, validated list of homogeneous invariants sharing an evaluation
/// mode and matrix order.
class GeneratorSet {
 public:
  /// Throws Error on duplicate labels or a generator that is not homogeneous
  /// of positive degree in `grading`; DomainError on Pf/pl atoms with odd order.
  GeneratorSet(std::string name, std::size_t order, EvaluationMode mode, Grading grading,
               std::vector<std::pair<std::string, InvariantExpression>> generators);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  EvaluationMode mode() const noexcept { return mode_; }
  Grading grading() const noexcept { return grading_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::vector<Grade> grades() const;
  std::vector<std::string> labels() const;

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws Error for an unknown label.
  std::size_t index_of(std::string_view label) const;

  /// Grade of an expression in this set's grading; nullopt if inhomogeneous.
  std::optional<Grade> grade_of(const InvariantExpression& e) const;

  GeneratorSet without(std::size_t index) const;
  GeneratorSet subset(const std::vector<std::string>& labels, std::string name) const;
  /// Same generators under another grading; throws when one of them is not
  /// homogeneous there.
  GeneratorSet with_grading(Grading grading) const;

  std::string format(Grade g) const { return format_grade(g, grading_); }

 private:
  std::string name_;
  std::size_t order_;
  EvaluationMode mode_;
  Grading grading_;
  std::vector<Generator> generators_;
};

struct MonomialFactor {
  std::size_t index = 0;
  unsigned exponent = 0;

  friend bool operator==(const MonomialFactor&, const MonomialFactor&) = default;
};

/// Product of generator powers; factors sorted by generator index, exponents
/// positive. The empty monomial is the constant 1.
struct GeneratorMonomial {
  std::vector<MonomialFactor> factors;

  Grade grade(std::span<const Grade> grades) const;
  std::string to_string(const GeneratorSet& set) const;

  friend bool operator==(const GeneratorMonomial&, const GeneratorMonomial&) = default;
};

/// Every monomial of exactly grade `target`, each once. Order: generator
/// index ascending, exponents descending at each index.
std::vector<GeneratorMonomial> enumerate_monomials(std::span<const Grade> grades, Grade target);
std::vector<GeneratorMonomial> enumerate_monomials(const GeneratorSet& set, Grade target);

/// Evaluates a fixed monomial list from generator values, reusing the
/// product of the factor prefix shared with the previous monomial.
class MonomialEvaluator {
 public:
  explicit MonomialEvaluator(std::vector<GeneratorMonomial> monomials);

  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<GeneratorMonomial>& monomials() const noexcept { return monomials_; }

  /// out[k] = monomial k at `values` (values indexed by generator index).
  void evaluate(const PrimeField& field, std::span<const FieldElement> values, std::span<FieldElement> out) const;

 private:
  std::vector<GeneratorMonomial> monomials_;
  std::vector<std::size_t> shared_prefix_;
};

/// Rational-coefficient polynomial in generator labels.
class GeneratorPolynomial {
 public:
  using Exponents = std::map<std::string, unsigned>;

  struct Term {
    Rational coefficient;
    Exponents exponents;
  };

  GeneratorPolynomial() = default;
  explicit GeneratorPolynomial(std::vector<Term> terms);
  static GeneratorPolynomial constant(Rational c);
  static GeneratorPolynomial variable(const std::string& label);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<std::string> labels() const;

  GeneratorPolynomial operator+(const GeneratorPolynomial& rhs) const;
  GeneratorPolynomial operator-(const GeneratorPolynomial& rhs) const;
  GeneratorPolynomial operator*(const GeneratorPolynomial& rhs) const;
  GeneratorPolynomial scaled(Rational k) const;
  GeneratorPolynomial pow(unsigned e) const;

  /// Common grade of all terms under the generators' grades; nullopt if
  /// inhomogeneous. Throws for a label not in `set`.
  std::optional<Grade> grade(const GeneratorSet& set) const;
  /// Largest total degree in matrix coordinates over all terms.
  int max_total_degree(const GeneratorSet& set) const;

  /// values[i] is the value of set[i].
  FieldElement evaluate(const PrimeField& field, const GeneratorSet& set, std::span<const FieldElement> values) const;

  std::string to_string() const;

  friend bool operator==(const GeneratorPolynomial&, const GeneratorPolynomial&);

 private:
  std::vector<Term> terms_;
};

/// poly := ['-'] term (('+'|'-') term)* ; term := [uint] factor* ;
/// factor := label ('^' uint)? | '(' poly ')' ('^' uint)? ;
/// label := letter+ digit*  (so "E1E3" is E1 * E3).
GeneratorPolynomial parse_generator_polynomial(std::string_view text);

/// Values of every generator at a point.
std::vector<FieldElement> evaluate_generators(const PrimeField& field, const GeneratorSet& set, const SamplePoint& pt);

}  // namespace orthoinv
