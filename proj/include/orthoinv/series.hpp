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

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orthoinv {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent pair (i, j) of s^i t^j. Univariate series in t use (d, 0).
using SeriesIndex = std::pair<int, int>;

/// Coefficients indexed by degree or bidegree, up to a total-degree cap.
class CoefficientTable {
 public:
  CoefficientTable(bool bivariate, int cap) : bivariate_(bivariate), cap_(cap) {}

  bool bivariate() const noexcept { return bivariate_; }
  int cap() const noexcept { return cap_; }

  bool has(int i, int j = 0) const { return entries_.contains({i, j}); }
  /// Throws Error when the entry is absent ("no reference").
  const BigInt& at(int i, int j = 0) const;
  void set(int i, int j, BigInt v) { entries_[{i, j}] = std::move(v); }
  void set(int d, BigInt v) { set(d, 0, std::move(v)); }

  const std::map<SeriesIndex, BigInt>& entries() const noexcept { return entries_; }
  /// Dense coefficients 0..cap of a univariate table (absent entries are 0).
  std::vector<BigInt> univariate() const;

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

 private:
  bool bivariate_;
  int cap_;
  std::map<SeriesIndex, BigInt> entries_;
};

/// numerator / prod (1 - s^a t^b), with big-integer numerator coefficients.
///
/// A numerator may carry a gap: terms strictly between `known_through` and
/// the next stored exponent are unknown. Expansion is exact only up to
/// `known_through`.
struct RationalSeries {
  bool bivariate = false;
  std::map<SeriesIndex, BigInt> numerator;
  std::vector<SeriesIndex> denominator;
  std::optional<int> known_through;

  /// Largest cap for which expand() is exact.
  std::optional<int> expansion_limit() const { return known_through; }
  /// "(1 + t^6)/((1-t^2)^2(1-t^3)^2(1-t^4))"-style rendering.
  std::string to_string() const;
};

/// Parses "1 + t^4 + 3t^6 + ... + t^37" (variables s, t; "..." marks a gap).
/// In a univariate numerator t^d is stored at (d, 0).
RationalSeries parse_series_numerator(std::string_view text, bool bivariate);

/// Univariate series in t from numerator text and denominator degrees.
RationalSeries make_univariate_series(std::string_view numerator, const std::vector<int>& denominator_degrees);

/// Exact Taylor coefficients up to total degree `cap`: iterated geometric
/// convolution per denominator factor, then the numerator. Throws
/// DomainError when `cap` exceeds the known part of a gapped numerator.
CoefficientTable expand(const RationalSeries& series, int cap);

/// Same as expand; also accepts a stored reference table, which is
/// truncated to `cap`.
CoefficientTable expand_bivariate(const RationalSeries& series, int cap);
CoefficientTable expand_bivariate(const CoefficientTable& table, int cap);

/// Multiplies by 1/(1 - t): prefix sums.
CoefficientTable divide_by_one_minus_t(const CoefficientTable& table);
/// Multiplies by (1 - t).
CoefficientTable multiply_by_one_minus_t(const CoefficientTable& table);
/// Multiplies a truncated expansion by every denominator factor.
CoefficientTable multiply_by_denominator(const RationalSeries& series, const CoefficientTable& table);

struct SymmetryReport {
  bool symmetric = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> mismatches;
};

/// coeff(i, j) == coeff(j, i) for every stored entry whose mirror is stored.
SymmetryReport symmetry_check(const CoefficientTable& table);
/// Palindromy of a univariate numerator of degree D: coeff(k) == coeff(D-k)
/// for every pair where both sides are known.
SymmetryReport numerator_palindromy(const RationalSeries& series);

}  // namespace orthoinv
