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

#include "orthoinv/catalog.hpp"
#include "orthoinv/generators.hpp"
#include "properties.hpp"

namespace orthoinv::testing {
namespace {

void expect_clean(const PropertyResult& r) {
  EXPECT_GT(r.cases, 0u) << r.name;
  EXPECT_EQ(r.violations, 0u) << r.name << ": " << r.first_violation;
}

TEST(Properties, TraceCyclicity) { expect_clean(trace_cyclicity(101)); }
TEST(Properties, StarLaw) { expect_clean(star_law(102)); }
TEST(Properties, ImproperSignFlips) { expect_clean(improper_sign_flips(103)); }
TEST(Properties, PolarizationDiagonal) { expect_clean(polarization_diagonal(104)); }
TEST(Properties, PfOfSkew) { expect_clean(pf_of_skew(105)); }
TEST(Properties, PfSquaredIsDet) { expect_clean(pf_squared_is_det(106)); }

TEST(Properties, SoInvarianceSmall) {
  const auto r = so_invariance(107, 4, 10);
  expect_clean(r);
  EXPECT_GT(r.cases, 4u * 10u * 300u);
}

// The invariance check must be able to fail: congruence by a non-orthogonal
// matrix changes tr(x^2).
TEST(Properties, NonOrthogonalConjugationIsDetected) {
  const PrimeField f;
  const GeneratorSet& set = Catalog::instance().generator_set("S3_E6");
  FieldMatrix g = identity(f, 3);
  g(0, 1) = f.from_int(1);
  const SamplePoint pt = random_traceless(EvaluationContext{3, f, 1, set.mode()}, 0);
  const auto before = evaluate_generators(f, set, pt);
  const auto after = evaluate_generators(f, set, conjugate(f, g, pt));
  EXPECT_NE(before[0], after[0]);
}

}  // namespace
}  // namespace orthoinv::testing
