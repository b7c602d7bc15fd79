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

#include <set>

#include "orthoinv/catalog.hpp"

namespace orthoinv {
namespace {

const Catalog& cat() { return Catalog::instance(); }

TEST(Catalog, Lookup) {
  const auto names = cat().names();
  EXPECT_TRUE(std::find(names.begin(), names.end(), "S4_UV20") != names.end());
  try {
    cat().get("S6_NOPE");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("C52_MSG171"), std::string::npos);
  }
  EXPECT_THROW(cat().series("S4_UV20"), Error);
  EXPECT_THROW(detail::embedded_file("missing.txt"), Error);
}

TEST(Catalog, GeneratorSets) {
  const auto& s4 = cat().generator_set("S4_UV20");
  ASSERT_EQ(s4.size(), 20u);
  EXPECT_EQ(s4[0].label, "U1");
  EXPECT_EQ(s4[19].label, "V11");
  EXPECT_EQ(s4.mode(), EvaluationMode::kTransposeBound);
  std::vector<int> degrees;
  for (const auto& g : s4.generators()) degrees.push_back(g.grade.x);
  EXPECT_EQ(degrees, (std::vector<int>{2, 2, 2, 3, 3, 4, 4, 4, 6, 4, 5, 6, 6, 6, 7, 7, 8, 8, 9, 9}));

  EXPECT_EQ(cat().generator_set("S5_MSG89").size(), 89u);
  const auto& c52 = cat().generator_set("C52_MSG171");
  EXPECT_EQ(c52.size(), 171u);
  EXPECT_EQ(c52.mode(), EvaluationMode::kTwoGeneric);
  EXPECT_EQ(c52.grading(), Grading::kBigraded);
  EXPECT_EQ(cat().generator_set("S5_HSOP14_CONJ").size(), 14u);
  EXPECT_EQ(cat().words("S5_REDUNDANT9").size(), 9u);
  EXPECT_EQ(cat().polynomials("S4_MODULE_BASIS16").size(), 16u);
  EXPECT_EQ(cat().s5_hsop_labels().size(), 14u);
  for (const auto& label : cat().s5_hsop_labels()) EXPECT_TRUE(cat().generator_set("S5_MSG89").find(label));
}

TEST(Catalog, StructuralCounts) {
  const auto checks = cat().structural_counts();
  EXPECT_EQ(checks.size(), 12u);
  for (const auto& c : checks) EXPECT_TRUE(c.ok()) << c.name << " " << c.expected << " vs " << c.observed;
  EXPECT_TRUE(cat().reduction_mismatches().empty());
  EXPECT_EQ(krull_dimension(3), 5);
  EXPECT_EQ(krull_dimension(4), 9);
  EXPECT_EQ(krull_dimension(5), 14);
}

TEST(Catalog, Table3StarCompatibility) {
  EXPECT_TRUE(cat().star_table3_check().empty());
  const auto& table = cat().table3();
  ASSERT_EQ(table.size(), 98u);
  std::size_t pairs = 0, sums = 0;
  for (const auto& e : table) {
    pairs += e.kind == Table3Entry::Kind::kPair;
    sums += e.kind == Table3Entry::Kind::kSum;
    if (e.kind != Table3Entry::Kind::kSingle) {
      ASSERT_TRUE(e.second.has_value());
      EXPECT_EQ(cyclic_normal_form(star(e.first)), cyclic_normal_form(*e.second));
    } else {
      EXPECT_EQ(cyclic_normal_form(star(e.first)), cyclic_normal_form(e.first));
    }
  }
  EXPECT_EQ(pairs, 73u);
  EXPECT_EQ(sums, 3u);
}

TEST(Catalog, Table3Examples) {
  const auto& table = cat().table3();
  auto find = [&](const char* a) {
    return std::find_if(table.begin(), table.end(), [&](const Table3Entry& e) { return e.first == parse_word(a); });
  };
  const auto pair = find("x^2y");
  ASSERT_NE(pair, table.end());
  EXPECT_EQ(pair->kind, Table3Entry::Kind::kPair);
  EXPECT_EQ(pair->second, parse_word("xy^2"));
  const auto single = find("y^3x^3y^2xyx^2");
  ASSERT_NE(single, table.end());
  EXPECT_EQ(single->kind, Table3Entry::Kind::kSingle);
  const auto sum = find("x^3y^2(xy)^2yxy");
  ASSERT_NE(sum, table.end());
  EXPECT_EQ(sum->kind, Table3Entry::Kind::kSum);
  EXPECT_EQ(*sum->second, parse_word("xyx(xy)^2x^2y^3"));
  EXPECT_EQ(star(sum->first), *sum->second);
}

TEST(Catalog, TransposeBoundReductionCoversTable2) {
  std::set<Word> reduced;
  for (const auto& e : cat().table3()) reduced.insert(transpose_trace_class(e.first));
  EXPECT_EQ(reduced.size(), 98u);
  for (const auto& w : cat().words("S5_REDUNDANT9")) EXPECT_EQ(reduced.erase(transpose_trace_class(w)), 1u);
  std::set<Word> table2;
  for (const auto& g : cat().generator_set("S5_MSG89").generators()) {
    table2.insert(transpose_trace_class(g.expression.atoms()[0].args[0].terms()[0].word));
  }
  EXPECT_EQ(reduced, table2);
}

TEST(Catalog, Syzygy) {
  const auto& syz = cat().syzygy_polynomials();
  const auto& s3 = cat().generator_set("S3_E6");
  EXPECT_EQ(syz.c1.terms().size(), 3u);
  EXPECT_EQ(syz.c1.grade(s3), (Grade{6, 0}));
  EXPECT_EQ(syz.c2.grade(s3), (Grade{12, 0}));
  EXPECT_EQ(syz.relation.grade(s3), (Grade{12, 0}));
  const auto scaled = syz.c2.scaled(Rational(144));
  for (const auto& t : scaled.terms()) EXPECT_EQ(t.coefficient.denominator(), 1) << t.coefficient;
  for (const auto& t : syz.c2.terms()) EXPECT_FALSE(t.exponents.contains("E6"));
  const auto rebuilt = parse_generator_polynomial("E6^2") + syz.c1 * parse_generator_polynomial("E6") + syz.c2;
  EXPECT_EQ(rebuilt, syz.relation);
}

TEST(Catalog, SeriesEntries) {
  const auto& s5 = cat().series("SERIES_S5");
  ASSERT_TRUE(s5.printed_denominator.has_value());
  EXPECT_EQ(s5.printed_denominator->size() + 2, s5.series.denominator.size());
  ASSERT_TRUE(s5.reference.has_value());
  EXPECT_EQ(s5.reference->at(18), 6206);
  EXPECT_FALSE(cat().series("SERIES_S3").reference.has_value());
}

TEST(Catalog, UnverifiedIdentitiesAreStored) {
  const auto& ids = cat().unverified_identities();
  ASSERT_FALSE(ids.empty());
  EXPECT_EQ(ids[0].name, "J9");
  EXPECT_EQ(ids[0].denominator, 1);
}

}  // namespace
}  // namespace orthoinv
