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

#include "orthoinv/series.hpp"

#include <algorithm>

#include "orthoinv/error.hpp"
#include "parse_util.hpp"

namespace orthoinv {
namespace {

using Grid = std::vector<std::vector<BigInt>>;

Grid make_grid(int cap) { return Grid(static_cast<std::size_t>(cap + 1), std::vector<BigInt>(static_cast<std::size_t>(cap + 1))); }

bool in_range(int i, int j, int cap) { return i >= 0 && j >= 0 && i + j <= cap; }

// Multiplies grid by 1/(1 - s^a t^b) in place, truncated at total degree cap.
void divide_factor(Grid& g, SeriesIndex f, int cap) {
  for (int i = f.first; i <= cap; ++i) {
    for (int j = f.second; i + j <= cap; ++j) g[i][j] += g[i - f.first][j - f.second];
  }
}

// Multiplies grid by (1 - s^a t^b) in place; descending order reads
// unmodified cells.
void multiply_factor(Grid& g, SeriesIndex f, int cap) {
  for (int i = cap; i >= f.first; --i) {
    for (int j = cap - i; j >= f.second; --j) g[i][j] -= g[i - f.first][j - f.second];
  }
}

Grid to_grid(const CoefficientTable& t) {
  Grid g = make_grid(t.cap());
  for (const auto& [k, v] : t.entries()) {
    if (in_range(k.first, k.second, t.cap())) g[k.first][k.second] = v;
  }
  return g;
}

CoefficientTable from_grid(const Grid& g, bool bivariate, int cap) {
  CoefficientTable t(bivariate, cap);
  for (int i = 0; i <= cap; ++i) {
    for (int j = 0; i + j <= cap; ++j) {
      if (!bivariate && j > 0) break;
      t.set(i, j, g[i][j]);
    }
  }
  return t;
}

std::string index_text(SeriesIndex k, bool bivariate) {
  auto var = [](char v, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? std::string(1, v) : std::string(1, v) + "^" + std::to_string(e);
  };
  return bivariate ? var('s', k.first) + var('t', k.second) : var('t', k.first);
}

}  // namespace

const BigInt& CoefficientTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  if (it == entries_.end()) {
    throw Error("no reference coefficient at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return it->second;
}

std::vector<BigInt> CoefficientTable::univariate() const {
  std::vector<BigInt> out(static_cast<std::size_t>(cap_ + 1));
  for (const auto& [k, v] : entries_) {
    if (k.second == 0 && k.first <= cap_) out[k.first] = v;
  }
  return out;
}

std::string RationalSeries::to_string() const {
  std::string num;
  bool first = true;
  bool gap_written = false;
  for (const auto& [k, c] : numerator) {
    const int total = k.first + k.second;
    if (known_through && total > *known_through && !gap_written) {
      num += " + ...";
      gap_written = true;
    }
    const std::string mono = index_text(k, bivariate);
    std::string coeff = c < 0 ? BigInt(-c).str() : c.str();
    if (c == 1 || c == -1) coeff = mono.empty() ? "1" : "";
    if (first) {
      num += (c < 0 ? "-" : "") + coeff + mono;
    } else {
      num += (c < 0 ? " - " : " + ") + coeff + mono;
    }
    first = false;
  }
  std::map<SeriesIndex, int> powers;
  for (const auto& f : denominator) powers[f] += 1;
  std::string den;
  for (const auto& [f, e] : powers) {
    den += "(1-" + index_text(f, bivariate) + ")";
    if (e > 1) den += "^" + std::to_string(e);
  }
  return "(" + num + ")/(" + den + ")";
}

RationalSeries parse_series_numerator(std::string_view text, bool bivariate) {
  detail::Cursor in(text);
  RationalSeries s;
  s.bivariate = bivariate;
  bool negative = in.accept('-');
  if (!negative) in.accept('+');
  int max_before_gap = 0;
  while (true) {
    if (in.starts_with("...")) {
      if (s.known_through) in.fail("second gap marker");
      in.advance(3);
      s.known_through = max_before_gap;
    } else {
      BigInt c = 1;
      const bool has_coeff = in.peek_digit();
      if (has_coeff) c = in.parse_uint();
      int i = 0;
      int j = 0;
      bool has_var = false;
      while (in.peek() == 's' || in.peek() == 't') {
        const char v = in.peek();
        in.advance(1);
        const auto e = static_cast<int>(in.parse_exponent());
        if (!bivariate && v == 's') in.fail("variable s in a univariate series");
        (v == 't' && bivariate ? j : i) += e;
        has_var = true;
      }
      if (!has_coeff && !has_var) in.fail("expected a term");
      if (negative) c = -c;
      s.numerator[{i, j}] += c;
      if (!s.known_through) max_before_gap = std::max(max_before_gap, i + j);
    }
    if (in.accept('+')) {
      negative = false;
    } else if (in.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  in.expect_end();
  std::erase_if(s.numerator, [](const auto& kv) { return kv.second == 0; });
  return s;
}

RationalSeries make_univariate_series(std::string_view numerator, const std::vector<int>& denominator_degrees) {
  RationalSeries s = parse_series_numerator(numerator, false);
  for (int d : denominator_degrees) {
    if (d <= 0) throw DomainError("denominator factor of non-positive degree");
    s.denominator.push_back({d, 0});
  }
  return s;
}

CoefficientTable expand(const RationalSeries& series, int cap) {
  if (cap < 0) throw DomainError("negative expansion cap");
  if (series.known_through && cap > *series.known_through) {
    throw DomainError("numerator is only known through degree " + std::to_string(*series.known_through) +
                      "; cannot expand to " + std::to_string(cap));
  }
  for (const auto& f : series.denominator) {
    if (f.first < 0 || f.second < 0 || f.first + f.second <= 0) {
      throw DomainError("denominator factor of non-positive degree");
    }
  }
  Grid g = make_grid(cap);
  for (const auto& [k, c] : series.numerator) {
    if (in_range(k.first, k.second, cap)) g[k.first][k.second] += c;
  }
  for (const auto& f : series.denominator) divide_factor(g, f, cap);
  return from_grid(g, series.bivariate, cap);
}

CoefficientTable expand_bivariate(const RationalSeries& series, int cap) { return expand(series, cap); }

CoefficientTable expand_bivariate(const CoefficientTable& table, int cap) {
  CoefficientTable out(true, cap);
  for (const auto& [k, v] : table.entries()) {
    if (k.first + k.second <= cap) out.set(k.first, k.second, v);
  }
  return out;
}

CoefficientTable divide_by_one_minus_t(const CoefficientTable& table) {
  if (table.bivariate()) throw DomainError("divide_by_one_minus_t needs a univariate table");
  Grid g = to_grid(table);
  divide_factor(g, {1, 0}, table.cap());
  return from_grid(g, false, table.cap());
}

CoefficientTable multiply_by_one_minus_t(const CoefficientTable& table) {
  if (table.bivariate()) throw DomainError("multiply_by_one_minus_t needs a univariate table");
  Grid g = to_grid(table);
  multiply_factor(g, {1, 0}, table.cap());
  return from_grid(g, false, table.cap());
}

CoefficientTable multiply_by_denominator(const RationalSeries& series, const CoefficientTable& table) {
  Grid g = to_grid(table);
  for (const auto& f : series.denominator) multiply_factor(g, f, table.cap());
  return from_grid(g, table.bivariate(), table.cap());
}

SymmetryReport symmetry_check(const CoefficientTable& table) {
  SymmetryReport r;
  if (!table.bivariate()) return r;
  for (const auto& [k, v] : table.entries()) {
    if (k.first >= k.second) continue;
    auto it = table.entries().find({k.second, k.first});
    if (it == table.entries().end()) continue;
    ++r.pairs_checked;
    if (it->second != v) {
      r.symmetric = false;
      r.mismatches.push_back("(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")=" + v.str() +
                             " vs " + it->second.str());
    }
  }
  return r;
}

SymmetryReport numerator_palindromy(const RationalSeries& series) {
  SymmetryReport r;
  if (series.bivariate || series.numerator.empty()) return r;
  const int top = series.numerator.rbegin()->first.first;
  auto known = [&](int d) {
    if (!series.known_through || d <= *series.known_through) return true;
    // Past the gap only stored terms are known; the rest are unknown.
    auto tail = series.numerator.upper_bound({*series.known_through, 0});
    return tail != series.numerator.end() && d >= tail->first.first;
  };
  auto coeff = [&](int d) -> BigInt {
    auto it = series.numerator.find({d, 0});
    return it == series.numerator.end() ? BigInt(0) : it->second;
  };
  for (int d = 0; 2 * d <= top; ++d) {
    const int mirror = top - d;
    if (!known(d) || !known(mirror)) continue;
    ++r.pairs_checked;
    if (coeff(d) != coeff(mirror)) {
      r.symmetric = false;
      r.mismatches.push_back("t^" + std::to_string(d) + ":" + coeff(d).str() + " vs t^" + std::to_string(mirror) + ":" +
                             coeff(mirror).str());
    }
  }
  return r;
}

}  // namespace orthoinv
