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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orthoinv/generators.hpp"
#include "orthoinv/series.hpp"
#include "orthoinv/word.hpp"

namespace orthoinv {

/// One line of the bigraded generating-set table.
struct Table3Entry {
  enum class Kind { kPair, kSum, kSingle };
  Kind kind = Kind::kSingle;
  Word first{std::vector<Letter>{Letter::kX}};
  std::optional<Word> second;
};

struct SeriesEntry {
  RationalSeries series;
  /// Denominator degrees as printed, when they differ from the stored ones.
  std::optional<std::vector<int>> printed_denominator;
  /// Printed Taylor coefficients from degree 0.
  std::optional<CoefficientTable> reference;
};

struct Syzygy {
  GeneratorPolynomial c1;
  GeneratorPolynomial c2;
  /// E6^2 + c1 E6 + c2.
  GeneratorPolynomial relation;
};

/// Stored right-hand side of an identity that cannot be checked here.
struct UnverifiedIdentity {
  std::string name;
  int denominator = 1;
  std::string text;
};

using CatalogPayload = std::variant<GeneratorSet, Syzygy, std::vector<GeneratorPolynomial>, std::vector<Word>,
                                    SeriesEntry, CoefficientTable>;

struct CatalogEntry {
  std::string name;
  std::string description;
  CatalogPayload payload;
};

struct CountCheck {
  std::string name;
  long long expected = 0;
  long long observed = 0;
  bool ok() const { return expected == observed; }
};

struct StarViolation {
  std::size_t line = 0;
  std::string entry;
  std::string reason;
};

/// Validated, immutable view of the embedded data files.
class Catalog {
 public:
  /// Parsed once on first use; throws Error if any data file fails to
  /// validate.
  static const Catalog& instance();

  /// Throws Error listing the known names.
  const CatalogEntry& get(std::string_view name) const;
  std::vector<std::string> names() const;

  const GeneratorSet& generator_set(std::string_view name) const;
  const SeriesEntry& series(std::string_view name) const;
  const std::vector<Word>& words(std::string_view name) const;
  const std::vector<GeneratorPolynomial>& polynomials(std::string_view name) const;
  const CoefficientTable& bivariate_table() const;
  const Syzygy& syzygy_polynomials() const;

  const std::vector<Table3Entry>& table3() const noexcept { return table3_; }
  const std::vector<UnverifiedIdentity>& unverified_identities() const noexcept { return identities_; }

  /// Labels of the conjectured n = 5 HSOP within S5_MSG89.
  std::vector<std::string> s5_hsop_labels() const;

  /// Table sizes, the 98 - 9 = 89 reduction and Krull dimensions.
  std::vector<CountCheck> structural_counts() const;
  /// Empty when every table entry is compatible with the * involution.
  std::vector<StarViolation> star_table3_check() const;

  /// Transpose-bound reduction of the bigraded table (one word per entry),
  /// minus the redundant words, compared with S5_MSG89 as trace classes.
  /// Returns the words that appear on exactly one side.
  std::vector<std::string> reduction_mismatches() const;

 private:
  Catalog();

  std::vector<CatalogEntry> entries_;
  std::vector<Table3Entry> table3_;
  std::vector<UnverifiedIdentity> identities_;
};

/// Krull dimension n(n+1)/2 - 1 of the SO_n invariants of a traceless matrix.
constexpr int krull_dimension(int n) { return n * (n + 1) / 2 - 1; }

namespace detail {
/// Contents of an embedded data file; throws Error for an unknown file.
std::string_view embedded_file(std::string_view name);
}  // namespace detail

}  // namespace orthoinv
