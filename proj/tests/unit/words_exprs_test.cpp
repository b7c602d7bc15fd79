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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orthoinv/evaluate.hpp"
#include "orthoinv/expression.hpp"
#include "orthoinv/random.hpp"
#include "orthoinv/word.hpp"

namespace orthoinv {
namespace {

using testing::IntMatrix;

Word w(const char* text) { return parse_word(text); }

FieldMatrix to_field(const PrimeField& f, const IntMatrix& m) {
  FieldMatrix out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out(i, j) = f.from_int(m[i][j]);
  return out;
}

TEST(Word, Parse) {
  const std::vector<Letter> xxy{Letter::kX, Letter::kX, Letter::kY};
  EXPECT_EQ(w("x^2y").letters(), xxy);
  EXPECT_EQ(w("A^2B"), w("x^2y"));
  EXPECT_EQ(w(" x x y "), w("x^2y"));
  EXPECT_EQ(w("(xy)^2x"), w("xyxyx"));
  const Word long_word = w("x^4y^2xy");
  EXPECT_EQ(long_word.size(), 8u);
  EXPECT_EQ(long_word.to_string(), "x^4y^2xy");
  EXPECT_EQ(long_word.bidegree(), (Bidegree{5, 3}));
  EXPECT_EQ(w(long_word.to_string().c_str()), long_word);
}

TEST(Word, ParseErrors) {
  EXPECT_THROW(w("x^0y"), ParseError);
  EXPECT_THROW(w(""), ParseError);
  EXPECT_THROW(w("x(y"), ParseError);
  EXPECT_THROW(w("xz"), ParseError);
  try {
    w("xyz");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Word, StarAndNormalForms) {
  EXPECT_EQ(star(w("x^2y")), w("xy^2"));
  EXPECT_EQ(cyclic_normal_form(star(w("xy"))), w("xy"));
  EXPECT_EQ(cyclic_normal_form(w("yx")), w("xy"));
  EXPECT_EQ(cyclic_normal_form(w("y^2xyx^2y^3x^3")), cyclic_normal_form(w("y^3x^3y^2xyx^2")));
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<Letter> l(1 + rng.below(12));
    for (auto& c : l) c = rng.below(2) ? Letter::kY : Letter::kX;
    const Word v(l);
    EXPECT_EQ(star(star(v)), v);
    EXPECT_EQ(cyclic_normal_form(cyclic_normal_form(v)), cyclic_normal_form(v));
    EXPECT_EQ(transpose_trace_class(v), transpose_trace_class(star(v)));
    EXPECT_LE(transpose_trace_class(v), cyclic_normal_form(v));
  }
}

TEST(MatrixExpression, ParseAndAlgebra) {
  const auto e = parse_matrix_expression("x^2(x+y)");
  EXPECT_EQ(e, parse_matrix_expression("x^3 + x^2y"));
  EXPECT_EQ(e.to_string(), "x^3 + x^2y");
  EXPECT_EQ(e.degree(), 3);
  EXPECT_FALSE(e.bidegree().has_value());
  EXPECT_TRUE((e - e).is_zero());
  EXPECT_EQ(parse_matrix_expression("2xy - yx").to_string(), "2xy - yx");
  EXPECT_EQ(parse_matrix_expression("(x+y)^2"), parse_matrix_expression("x^2 + xy + yx + y^2"));
  EXPECT_THROW(parse_matrix_expression("x +"), ParseError);
}

TEST(Invariant, ParseExamples) {
  const auto v5 = parse_invariant("Pf(A^2(A+B))");
  ASSERT_EQ(v5.atoms().size(), 1u);
  EXPECT_EQ(v5.atoms()[0].kind, AtomKind::kPf);
  EXPECT_EQ(v5.atoms()[0].args[0], parse_matrix_expression("x^3 + x^2y"));
  EXPECT_EQ(v5.total_degree(4), 6);
  EXPECT_FALSE(v5.bidegree(4).has_value());

  const auto v7 = parse_invariant("pl(AB^3,ABA)");
  ASSERT_EQ(v7.atoms().size(), 1u);
  EXPECT_EQ(v7.atoms()[0].kind, AtomKind::kPl);
  EXPECT_EQ(v7.total_degree(4), 7);

  const auto e1 = parse_invariant("tr(x^2)");
  EXPECT_EQ(e1.atoms()[0].kind, AtomKind::kTrace);
  EXPECT_EQ(e1.bidegree(), (Bidegree{2, 0}));
  EXPECT_FALSE(e1.has_pfaffian_atoms());

  EXPECT_EQ(parse_invariant("tr(x^2 + xy)").atoms().size(), 2u);
  EXPECT_EQ(parse_invariant("tr(xy) + tr(yx)").atoms().size(), 2u);
  EXPECT_FALSE(parse_invariant("tr(x^2) + tr(x^3)").total_degree().has_value());
}

TEST(Invariant, RoundTripAndErrors) {
  for (const char* text : {"tr(x^2) - 3/2 Pf(x^3 + x^2y)", "pl(xy^3, xyx)", "-tr(xy) + 2 tr(x^2y)"}) {
    const auto inv = parse_invariant(text);
    EXPECT_EQ(parse_invariant(inv.to_string()), inv) << text;
  }
  EXPECT_THROW(parse_invariant("tr(x"), ParseError);
  EXPECT_THROW(parse_invariant("det(x)"), ParseError);
  EXPECT_THROW(parse_invariant("pl(x)"), ParseError);
}

// x = [[1,2,0],[0,3,1],[4,0,-4]], y = x^T.
class FixedPoint : public ::testing::Test {
 protected:
  const PrimeField f;
  const IntMatrix xi{{1, 2, 0}, {0, 3, 1}, {4, 0, -4}};
  const IntMatrix yi = testing::int_transpose(xi);
  const FieldMatrix x = to_field(f, xi);
  const FieldMatrix y = to_field(f, yi);
};

TEST_F(FixedPoint, TraceWordsMatchIntegerEvaluation) {
  const std::pair<const char*, const char*> cases[] = {
      {"tr(x^2)", "xx"},        {"tr(xy)", "xy"},     {"tr(x^3)", "xxx"},
      {"tr(x^2y)", "xxy"},      {"tr(x^2y^2)", "xxyy"}, {"tr(xyx^2y^2)", "xyxxyy"}};
  for (const auto& [text, word] : cases) {
    const std::int64_t want = testing::int_trace_word(word, xi, yi);
    EXPECT_EQ(f.centered(evaluate_invariant(f, parse_invariant(text), x, y)), want) << text;
  }
  EXPECT_EQ(testing::int_trace_word("xx", xi, yi), 26);
  EXPECT_EQ(testing::int_trace_word("xxyy", xi, yi), 631);
  EXPECT_EQ(testing::int_trace_word("xyxxyy", xi, yi), 17669);
}

TEST_F(FixedPoint, SimpleValues) {
  FieldMatrix d(3, 3);
  d(0, 0) = f.from_int(1);
  d(1, 1) = f.from_int(2);
  d(2, 2) = f.from_int(-3);
  EXPECT_EQ(evaluate_invariant(f, parse_invariant("tr(x^2)"), d, d), f.from_int(14));
  std::int64_t frob = 0;
  for (const auto& row : xi)
    for (auto v : row) frob += v * v;
  EXPECT_EQ(evaluate_invariant(f, parse_invariant("tr(xy)"), x, y), f.from_int(frob));
  EXPECT_EQ(evaluate_word(f, w("x"), x, y), x);
  const FieldMatrix s = add(f, x, y);
  EXPECT_EQ(evaluate_matrix_expression(f, parse_matrix_expression("x+y"), s, s), scale(f, f.from_int(2), s));
  EXPECT_EQ(evaluate_invariant(f, parse_invariant("1/2 tr(x^2) - tr(x^2)"), x, y), f.neg(f.from_int(13)));
}

TEST(Pfaffian, Examples) {
  const PrimeField f;
  FieldMatrix two(2, 2);
  two(0, 1) = f.from_int(9);
  two(1, 0) = f.from_int(-9);
  EXPECT_EQ(pfaffian(f, two), f.from_int(9));
  EXPECT_EQ(pfaffian(f, FieldMatrix(0, 0)), f.one());
  EXPECT_THROW(pfaffian(f, FieldMatrix(3, 3)), DomainError);
  FieldMatrix bad(2, 2);
  bad(0, 1) = f.one();
  EXPECT_THROW(pfaffian(f, bad), DomainError);

  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const FieldMatrix s = random_skew(f, 4, rng);
    EXPECT_EQ(pfaffian(f, s), testing::oracle_pf4(f, s));
  }
}

TEST(Pfaffian, CapitalPfAndPolarization) {
  const PrimeField f;
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    FieldMatrix m(4, 4), n(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        m(i, j) = f.uniform(rng);
        n(i, j) = f.uniform(rng);
      }
    const FieldMatrix sym = add(f, m, transpose(m));
    EXPECT_EQ(cap_pf(f, sym), f.zero());
    EXPECT_EQ(cap_pf(f, m), testing::oracle_pf4(f, subtract(f, m, transpose(m))));
    const FieldElement c = f.uniform(rng);
    EXPECT_EQ(polarized_pf(f, scale(f, c, m), n), f.mul(c, polarized_pf(f, m, n)));
    EXPECT_EQ(polarized_pf(f, m, n), polarized_pf(f, n, m));
    EXPECT_EQ(polarized_pf(f, m, m), f.mul(f.from_int(2), cap_pf(f, m)));
  }
  EXPECT_THROW(cap_pf(f, FieldMatrix(3, 3)), DomainError);
  EXPECT_THROW(polarized_pf(f, identity(f, 6), identity(f, 6)), DomainError);
}

TEST(Evaluate, DistributivityAtRandomPoints) {
  const PrimeField f;
  const auto lhs = parse_invariant("Pf(x^2(x+y))");
  const auto rhs = parse_invariant("Pf(x^3 + x^2y)");
  const EvaluationContext ctx{4, f, 10, EvaluationMode::kTwoGeneric};
  for (std::uint64_t k = 0; k < 100; ++k) {
    const SamplePoint pt = random_traceless(ctx, k);
    EXPECT_EQ(evaluate_matrix_expression(f, parse_matrix_expression("x^2(x+y)"), pt),
              evaluate_matrix_expression(f, parse_matrix_expression("x^3 + x^2y"), pt));
    EXPECT_EQ(evaluate_invariant(f, lhs, pt), evaluate_invariant(f, rhs, pt));
  }
}

}  // namespace
}  // namespace orthoinv
