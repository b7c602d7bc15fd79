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
#include "orthoinv/dual.hpp"
#include "orthoinv/linalg.hpp"
#include "orthoinv/random.hpp"
#include "orthoinv/sample.hpp"

namespace orthoinv {
namespace {

using testing::oracle_determinant;

FieldMatrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, Rng& rng) {
  FieldMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.uniform(rng);
  return m;
}

TEST(PrimeField, SmallPrimeArithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.mul(f.from_int(3), f.from_int(5)), f.one());
  EXPECT_EQ(f.div(f.from_int(3), f.from_int(3)), f.one());
  EXPECT_EQ(f.inv(f.from_int(3)), f.from_int(5));
  EXPECT_EQ(f.from_int(-1).value, 6u);
  EXPECT_EQ(f.from_ratio(1, 2), f.from_int(4));
  EXPECT_EQ(f.pow(f.from_int(3), 6), f.one());
  EXPECT_EQ(f.centered(f.from_int(6)), -1);
  EXPECT_THROW(f.inv(f.zero()), DomainError);
  EXPECT_THROW(f.from_ratio(1, 14), DomainError);
}

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(8), DomainError);
  EXPECT_THROW(PrimeField(3), DomainError);
  EXPECT_THROW(PrimeField((std::uint64_t{1} << 62) + 57), DomainError);
  EXPECT_NO_THROW(PrimeField(PrimeField::kMersenne31));
}

TEST(PrimeField, IsPrimeAgreesWithTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial(n)) << n;
  EXPECT_TRUE(is_prime(PrimeField::kMersenne61));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(PrimeField, ReductionPathsMatchWideDivision) {
  for (std::uint64_t p : {PrimeField::kMersenne61, PrimeField::kMersenne31, std::uint64_t{1000000007},
                          std::uint64_t{4611686018427387847ULL}}) {
    const PrimeField f(p);
    Rng rng(p);
    for (int i = 0; i < 2000; ++i) {
      const FieldElement a = f.uniform(rng), b = f.uniform(rng);
      const auto want = static_cast<std::uint64_t>(static_cast<uint128>(a.value) * b.value % p);
      ASSERT_EQ(f.mul(a, b).value, want) << p;
      ASSERT_LT(a.value, p);
      ASSERT_EQ(f.sub(a, a), f.zero());
      ASSERT_EQ(f.add(a, f.neg(a)), f.zero());
      if (!f.is_zero(a)) ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
    }
  }
}

TEST(Matrix, ProductLaws) {
  const PrimeField f;
  Rng rng(1);
  const FieldMatrix a = random_matrix(f, 5, 5, rng), b = random_matrix(f, 5, 5, rng),
                    c = random_matrix(f, 5, 5, rng);
  EXPECT_EQ(multiply(f, identity(f, 5), a), a);
  EXPECT_EQ(multiply(f, a, FieldMatrix(5, 5)), FieldMatrix(5, 5));
  EXPECT_EQ(multiply(f, multiply(f, a, b), c), multiply(f, a, multiply(f, b, c)));
  EXPECT_EQ(trace_of_product(f, a, b), trace(f, multiply(f, a, b)));
  EXPECT_THROW(multiply(f, a, FieldMatrix(4, 5)), DimensionError);
  EXPECT_THROW(add(f, a, FieldMatrix(5, 4)), DimensionError);
}

TEST(Rank, Examples) {
  const PrimeField f;
  EXPECT_EQ(rank_mod_p(f, identity(f, 3)), 3u);
  EXPECT_EQ(rank_mod_p(f, FieldMatrix(4, 6)), 0u);
  FieldMatrix outer(4, 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j) outer(i, j) = f.from_int(static_cast<std::int64_t>((i + 1) * (j + 2)));
  EXPECT_EQ(rank_mod_p(f, outer), 1u);
  EXPECT_EQ(rank_mod_p(f, FieldMatrix()), 0u);
}

TEST(Rank, ProductOfRandomFactorsHasInnerRank) {
  const PrimeField f;
  Rng rng(2);
  for (std::size_t k = 1; k <= 6; ++k) {
    const FieldMatrix m = multiply(f, random_matrix(f, 9, k, rng), random_matrix(f, k, 7, rng));
    EXPECT_EQ(rank_mod_p(f, m), k);
    EXPECT_EQ(rank_mod_p(f, transpose(m)), k);
  }
}

TEST(Rank, PivotPrefixesGiveLeadingColumnRanks) {
  const PrimeField f;
  Rng rng(3);
  FieldMatrix m = random_matrix(f, 8, 6, rng);
  for (std::size_t i = 0; i < 8; ++i) m(i, 2) = f.add(m(i, 0), m(i, 1));
  for (std::size_t i = 0; i < 8; ++i) m(i, 5) = m(i, 3);
  const auto pivots = pivot_columns(f, m);
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1, 3, 4}));
}

TEST(Determinant, MatchesLeibnizOracle) {
  const PrimeField f;
  Rng rng(4);
  for (std::size_t n = 1; n <= 6; ++n) {
    const FieldMatrix m = random_matrix(f, n, n, rng);
    EXPECT_EQ(determinant(f, m), oracle_determinant(f, m)) << n;
  }
  FieldMatrix singular = random_matrix(f, 4, 4, rng);
  for (std::size_t j = 0; j < 4; ++j) singular(3, j) = singular(0, j);
  EXPECT_EQ(determinant(f, singular), f.zero());
}

TEST(Inverse, RoundTripAndSingular) {
  const PrimeField f(101);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const FieldMatrix m = random_matrix(f, 4, 4, rng);
    const auto inv = inverse(f, m);
    ASSERT_EQ(inv.has_value(), determinant(f, m) != f.zero());
    if (inv) EXPECT_EQ(multiply(f, m, *inv), identity(f, 4));
  }
  EXPECT_FALSE(inverse(f, FieldMatrix(3, 3)).has_value());
}

TEST(EchelonBasis, TracksSpan) {
  const PrimeField f;
  EchelonBasis basis(f, 3);
  auto v = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::vector<FieldElement>{f.from_int(a), f.from_int(b), f.from_int(c)};
  };
  EXPECT_TRUE(basis.insert(v(1, 2, 3)));
  EXPECT_FALSE(basis.insert(v(2, 4, 6)));
  EXPECT_TRUE(basis.insert(v(0, 1, 1)));
  EXPECT_TRUE(basis.contains(v(1, 3, 4)));
  EXPECT_FALSE(basis.contains(v(0, 0, 1)));
  EXPECT_EQ(basis.rank(), 2u);
}

TEST(Dual, ProductRuleGivesDerivative) {
  const PrimeField f;
  const DualField d(f);
  const FieldElement a = f.from_int(11);
  const DualElement x = d.variable(a);
  const DualElement cube = d.mul(x, d.mul(x, x));
  EXPECT_EQ(cube.primal, f.from_int(1331));
  EXPECT_EQ(cube.tangent, f.from_int(3 * 121));
  const DualElement q = d.div(d.one(), x);
  EXPECT_EQ(q.tangent, f.neg(f.inv(f.from_int(121))));
}

TEST(Sample, TracelessAndDeterministic) {
  for (auto mode : {EvaluationMode::kTransposeBound, EvaluationMode::kTwoGeneric}) {
    const EvaluationContext ctx{5, PrimeField{}, 9, mode};
    for (std::uint64_t k = 0; k < 20; ++k) {
      const SamplePoint a = random_traceless(ctx, k);
      const SamplePoint b = random_traceless(ctx, k);
      EXPECT_EQ(a.x, b.x);
      EXPECT_EQ(a.y, b.y);
      EXPECT_EQ(trace(ctx.field, a.x), ctx.field.zero());
      EXPECT_EQ(trace(ctx.field, a.y), ctx.field.zero());
      if (mode == EvaluationMode::kTransposeBound) EXPECT_EQ(a.y, transpose(a.x));
    }
    EXPECT_NE(random_traceless(ctx, 0).x, random_traceless(ctx, 1).x);
  }
  EXPECT_THROW(random_traceless(EvaluationContext{1}, 0), DomainError);
}

TEST(Cayley, ZeroGivesIdentityAndDrawsAreSpecialOrthogonal) {
  const PrimeField f;
  EXPECT_EQ(cayley_transform(f, FieldMatrix(4, 4)), identity(f, 4));
  Rng rng(6);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int t = 0; t < 10; ++t) {
      const FieldMatrix q = cayley_special_orthogonal(f, n, rng);
      EXPECT_EQ(multiply(f, transpose(q), q), identity(f, n));
      EXPECT_EQ(oracle_determinant(f, q), f.one());
      EXPECT_EQ(determinant(f, q), f.one());
    }
  }
}

}  // namespace
}  // namespace orthoinv
