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

#include "orthoinv/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "orthoinv/error.hpp"

namespace orthoinv {
namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> data_lines(std::string_view file) {
  std::vector<Line> out;
  std::istringstream in{std::string(detail::embedded_file(file))};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
  }
  return out;
}

[[noreturn]] void data_error(std::string_view file, const Line& line, const std::string& what) {
  throw Error(std::string(file) + ":" + std::to_string(line.number) + ": " + what);
}

// "label = rhs"
std::pair<std::string, std::string> split_definition(std::string_view file, const Line& line) {
  const auto eq = line.text.find('=');
  if (eq == std::string::npos) data_error(file, line, "expected 'label = value'");
  return {trim(std::string_view(line.text).substr(0, eq)), trim(std::string_view(line.text).substr(eq + 1))};
}

int parse_int(std::string_view file, const Line& line, std::string_view s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) data_error(file, line, "bad integer '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

GeneratorSet definitions_set(std::string_view file, std::string name, std::size_t order) {
  std::vector<std::pair<std::string, InvariantExpression>> gens;
  for (const auto& line : data_lines(file)) {
    auto [label, rhs] = split_definition(file, line);
    try {
      gens.emplace_back(label, parse_invariant(rhs));
    } catch (const ParseError& e) {
      data_error(file, line, e.what());
    }
  }
  return GeneratorSet(std::move(name), order, EvaluationMode::kTransposeBound, Grading::kTotal, std::move(gens));
}

std::vector<std::pair<std::string, Word>> word_lines(std::string_view file) {
  std::vector<std::pair<std::string, Word>> out;
  for (const auto& line : data_lines(file)) {
    try {
      out.emplace_back(line.text, parse_word(line.text));
    } catch (const ParseError& e) {
      data_error(file, line, e.what());
    }
  }
  return out;
}

GeneratorSet word_set(std::string_view file, std::string name) {
  std::vector<std::pair<std::string, InvariantExpression>> gens;
  for (auto& [label, w] : word_lines(file)) gens.emplace_back(label, InvariantExpression::trace(w));
  return GeneratorSet(std::move(name), 5, EvaluationMode::kTransposeBound, Grading::kTotal, std::move(gens));
}

std::vector<Table3Entry> parse_table3(std::string_view file) {
  std::vector<Table3Entry> out;
  for (const auto& line : data_lines(file)) {
    Table3Entry e;
    std::string_view body = line.text;
    char separator = 0;
    if (body.starts_with("pair:")) {
      e.kind = Table3Entry::Kind::kPair;
      separator = '|';
      body.remove_prefix(5);
    } else if (body.starts_with("sum:")) {
      e.kind = Table3Entry::Kind::kSum;
      separator = '+';
      body.remove_prefix(4);
    }
    try {
      if (separator == 0) {
        e.first = parse_word(body);
      } else {
        const auto pos = body.find(separator);
        if (pos == std::string_view::npos) data_error(file, line, std::string("missing '") + separator + "'");
        e.first = parse_word(body.substr(0, pos));
        e.second = parse_word(body.substr(pos + 1));
      }
    } catch (const ParseError& err) {
      data_error(file, line, err.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

GeneratorSet table3_set(const std::vector<Table3Entry>& table) {
  std::vector<std::pair<std::string, InvariantExpression>> gens;
  for (const auto& e : table) {
    switch (e.kind) {
      case Table3Entry::Kind::kPair:
        gens.emplace_back(e.first.to_string(), InvariantExpression::trace(e.first));
        gens.emplace_back(e.second->to_string(), InvariantExpression::trace(*e.second));
        break;
      case Table3Entry::Kind::kSum:
        gens.emplace_back(e.first.to_string() + " + " + e.second->to_string(),
                          InvariantExpression::trace(MatrixExpression(e.first) + MatrixExpression(*e.second)));
        break;
      case Table3Entry::Kind::kSingle:
        gens.emplace_back(e.first.to_string(), InvariantExpression::trace(e.first));
        break;
    }
  }
  return GeneratorSet("C52_MSG171", 5, EvaluationMode::kTwoGeneric, Grading::kBigraded, std::move(gens));
}

Syzygy parse_syzygy(std::string_view file) {
  std::map<std::string, GeneratorPolynomial> polys;
  for (const auto& line : data_lines(file)) {
    auto [lhs, rhs] = split_definition(file, line);
    const auto parts = split_ws(lhs);
    if (parts.size() != 2) data_error(file, line, "expected '<k> <name> = <poly>'");
    const int k = parse_int(file, line, parts[0]);
    try {
      polys[parts[1]] = parse_generator_polynomial(rhs).scaled(Rational(1, k));
    } catch (const ParseError& e) {
      data_error(file, line, e.what());
    }
  }
  if (!polys.contains("c1") || !polys.contains("c2")) throw Error(std::string(file) + ": c1 and c2 required");
  const auto e6 = GeneratorPolynomial::variable("E6");
  Syzygy s{polys["c1"], polys["c2"], {}};
  s.relation = e6.pow(2) + s.c1 * e6 + s.c2;
  return s;
}

std::vector<UnverifiedIdentity> parse_identities(std::string_view file) {
  std::vector<UnverifiedIdentity> out;
  for (const auto& line : data_lines(file)) {
    auto [lhs, rhs] = split_definition(file, line);
    const auto parts = split_ws(lhs);
    if (parts.size() != 2) data_error(file, line, "expected '<k> <name> = <rhs>'");
    out.push_back({parts[1], parse_int(file, line, parts[0]), rhs});
  }
  return out;
}

std::vector<int> parse_degrees(std::string_view file, const Line& line, std::string_view text) {
  std::vector<int> out;
  for (const auto& tok : split_ws(text)) out.push_back(parse_int(file, line, tok));
  return out;
}

std::vector<std::pair<std::string, SeriesEntry>> parse_series_file(std::string_view file) {
  std::vector<std::pair<std::string, SeriesEntry>> out;
  std::string section;
  std::map<std::string, std::pair<Line, std::string>> fields;
  auto flush = [&] {
    if (section.empty()) return;
    if (!fields.contains("numerator") || !fields.contains("denominator")) {
      throw Error(std::string(file) + ": section " + section + " needs numerator and denominator");
    }
    const auto& [dline, dtext] = fields.at("denominator");
    SeriesEntry e{make_univariate_series(fields.at("numerator").second, parse_degrees(file, dline, dtext)), {}, {}};
    if (auto it = fields.find("printed_denominator"); it != fields.end()) {
      e.printed_denominator = parse_degrees(file, it->second.first, it->second.second);
    }
    if (auto it = fields.find("reference"); it != fields.end()) {
      const auto coeffs = split_ws(it->second.second);
      CoefficientTable t(false, static_cast<int>(coeffs.size()) - 1);
      for (std::size_t d = 0; d < coeffs.size(); ++d) t.set(static_cast<int>(d), BigInt(coeffs[d]));
      e.reference = std::move(t);
    }
    out.emplace_back(section, std::move(e));
    fields.clear();
  };
  for (const auto& line : data_lines(file)) {
    if (line.text.front() == '[') {
      flush();
      if (line.text.back() != ']') data_error(file, line, "unterminated section header");
      section = line.text.substr(1, line.text.size() - 2);
      continue;
    }
    if (section.empty()) data_error(file, line, "field outside a section");
    auto [key, value] = split_definition(file, line);
    fields.insert_or_assign(key, std::pair{line, value});
  }
  flush();
  return out;
}

CoefficientTable parse_bivariate(std::string_view file) {
  int cap = -1;
  std::vector<std::pair<Line, std::vector<std::string>>> rows;
  for (const auto& line : data_lines(file)) {
    const auto colon = line.text.find(':');
    if (colon == std::string::npos) data_error(file, line, "expected 'd: coefficients'");
    const int d = parse_int(file, line, trim(std::string_view(line.text).substr(0, colon)));
    auto coeffs = split_ws(std::string_view(line.text).substr(colon + 1));
    if (d != cap + 1) data_error(file, line, "degrees must be consecutive from 0");
    if (coeffs.size() != static_cast<std::size_t>(d + 1)) data_error(file, line, "expected d+1 coefficients");
    cap = d;
    rows.emplace_back(line, std::move(coeffs));
  }
  CoefficientTable t(true, cap);
  for (std::size_t d = 0; d < rows.size(); ++d) {
    const auto& coeffs = rows[d].second;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      t.set(static_cast<int>(d - k), static_cast<int>(k), BigInt(coeffs[k]));
    }
  }
  return t;
}

std::string kind_name(Table3Entry::Kind k) {
  switch (k) {
    case Table3Entry::Kind::kPair: return "pair";
    case Table3Entry::Kind::kSum: return "sum";
    default: return "single";
  }
}

std::string entry_text(const Table3Entry& e) {
  std::string s = kind_name(e.kind) + ": " + e.first.to_string();
  if (e.second) s += (e.kind == Table3Entry::Kind::kPair ? " | " : " + ") + e.second->to_string();
  return s;
}

}  // namespace

Catalog::Catalog() {
  table3_ = parse_table3("c52_msg171.txt");
  identities_ = parse_identities("s4_unverified_identities.txt");

  GeneratorSet s3 = definitions_set("s3_generators.txt", "S3_E6", 3);
  GeneratorSet s3_hsop = s3.subset({"E1", "E2", "E3", "E4", "E5"}, "S3_HSOP");
  GeneratorSet s4 = definitions_set("s4_generators.txt", "S4_UV20", 4);
  GeneratorSet s4_hsop = s4.subset({"U1", "U2", "U3", "U4", "U5", "U6", "U7", "U8", "U9"}, "S4_HSOP_U9");

  std::vector<GeneratorPolynomial> basis;
  for (const auto& line : data_lines("s4_module_basis16.txt")) {
    try {
      auto p = parse_generator_polynomial(line.text);
      if (!p.grade(s4)) data_error("s4_module_basis16.txt", line, "inhomogeneous basis element");
      basis.push_back(std::move(p));
    } catch (const ParseError& e) {
      data_error("s4_module_basis16.txt", line, e.what());
    }
  }

  std::vector<Word> redundant;
  for (auto& [label, w] : word_lines("s5_redundant9.txt")) redundant.push_back(std::move(w));

  Syzygy syzygy = parse_syzygy("s3_syzygy.txt");
  for (const auto* p : {&syzygy.c1, &syzygy.c2, &syzygy.relation}) {
    if (!p->grade(s3)) throw Error("s3_syzygy.txt: inhomogeneous polynomial " + p->to_string());
  }

  entries_.push_back({"S3_E6", "generators E1..E6, n = 3", std::move(s3)});
  entries_.push_back({"S3_HSOP", "parameters E1..E5, n = 3", std::move(s3_hsop)});
  entries_.push_back({"S3_SYZYGY", "c1, c2 and the relation E6^2 + c1 E6 + c2", std::move(syzygy)});
  entries_.push_back({"S4_UV20", "generators U1..U9, V1..V11, n = 4", std::move(s4)});
  entries_.push_back({"S4_HSOP_U9", "parameters U1..U9, n = 4", std::move(s4_hsop)});
  entries_.push_back({"S4_MODULE_BASIS16", "free module basis as printed, n = 4", std::move(basis)});
  entries_.push_back({"S5_MSG89", "89 trace words, y = x^T, n = 5", word_set("s5_msg89.txt", "S5_MSG89")});
  entries_.push_back({"S5_HSOP14_CONJ", "conjectured parameters, 14 trace words, n = 5",
                      word_set("s5_hsop14_conj.txt", "S5_HSOP14_CONJ")});
  entries_.push_back({"S5_REDUNDANT9", "redundant words of the transpose-bound reduction", std::move(redundant)});
  entries_.push_back({"C52_MSG171", "171 *-invariant generators of two 5x5 matrices", table3_set(table3_)});
  for (auto& [name, entry] : parse_series_file("series.txt")) {
    entries_.push_back({name, entry.series.to_string(), std::move(entry)});
  }
  entries_.push_back({"BIVARIATE_C52_TABLE", "bigraded Taylor coefficients through total degree 15",
                      parse_bivariate("c52_bivariate.txt")});
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

const CatalogEntry& Catalog::get(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  std::string known;
  for (const auto& e : entries_) known += (known.empty() ? "" : ", ") + e.name;
  throw Error("unknown catalog entry '" + std::string(name) + "'; available: " + known);
}

namespace {
template <class T>
const T& payload_as(const CatalogEntry& e, std::string_view what) {
  if (const T* p = std::get_if<T>(&e.payload)) return *p;
  throw Error("catalog entry " + e.name + " is not " + std::string(what));
}
}  // namespace

const GeneratorSet& Catalog::generator_set(std::string_view name) const {
  return payload_as<GeneratorSet>(get(name), "a generator set");
}
const SeriesEntry& Catalog::series(std::string_view name) const {
  return payload_as<SeriesEntry>(get(name), "a series");
}
const std::vector<Word>& Catalog::words(std::string_view name) const {
  return payload_as<std::vector<Word>>(get(name), "a word list");
}
const std::vector<GeneratorPolynomial>& Catalog::polynomials(std::string_view name) const {
  return payload_as<std::vector<GeneratorPolynomial>>(get(name), "a polynomial list");
}
const CoefficientTable& Catalog::bivariate_table() const {
  return payload_as<CoefficientTable>(get("BIVARIATE_C52_TABLE"), "a coefficient table");
}
const Syzygy& Catalog::syzygy_polynomials() const { return payload_as<Syzygy>(get("S3_SYZYGY"), "a syzygy"); }

std::vector<std::string> Catalog::s5_hsop_labels() const {
  const auto& msg = generator_set("S5_MSG89");
  std::map<Word, std::string> by_class;
  for (const auto& g : msg.generators()) {
    by_class.emplace(transpose_trace_class(g.expression.atoms()[0].args[0].terms()[0].word), g.label);
  }
  std::vector<std::string> out;
  for (const auto& g : generator_set("S5_HSOP14_CONJ").generators()) {
    const auto it = by_class.find(transpose_trace_class(g.expression.atoms()[0].args[0].terms()[0].word));
    if (it == by_class.end()) throw Error("parameter " + g.label + " is not among the 89 generators");
    out.push_back(it->second);
  }
  return out;
}

namespace {

std::set<Word> reduction_classes(const std::vector<Table3Entry>& table) {
  std::set<Word> out;
  for (const auto& e : table) out.insert(transpose_trace_class(e.first));
  return out;
}

std::set<Word> word_classes(const GeneratorSet& set) {
  std::set<Word> out;
  for (const auto& g : set.generators()) out.insert(transpose_trace_class(g.expression.atoms()[0].args[0].terms()[0].word));
  return out;
}

}  // namespace

std::vector<CountCheck> Catalog::structural_counts() const {
  std::vector<CountCheck> out;
  long long pairs = 0, sums = 0, singles = 0;
  for (const auto& e : table3_) {
    if (e.kind == Table3Entry::Kind::kPair) ++pairs;
    else if (e.kind == Table3Entry::Kind::kSum) ++sums;
    else ++singles;
  }
  const auto reduced = reduction_classes(table3_);
  std::set<Word> remaining = reduced;
  for (const auto& w : words("S5_REDUNDANT9")) remaining.erase(transpose_trace_class(w));

  out.push_back({"table3 braced pairs", 73, pairs});
  out.push_back({"table3 unbraced entries", 25, singles + sums});
  out.push_back({"table3 two-word sums", 3, sums});
  out.push_back({"table3 generators", 171, static_cast<long long>(generator_set("C52_MSG171").size())});
  out.push_back({"table2 words", 89, static_cast<long long>(generator_set("S5_MSG89").size())});
  out.push_back({"transpose-bound reduction", 98, static_cast<long long>(reduced.size())});
  out.push_back({"redundant words", 9, static_cast<long long>(words("S5_REDUNDANT9").size())});
  out.push_back({"reduction minus redundant", 89, static_cast<long long>(remaining.size())});
  out.push_back({"reduction mismatches against table2", 0, static_cast<long long>(reduction_mismatches().size())});
  out.push_back({"krull dimension n=3 vs S3_HSOP", krull_dimension(3),
                 static_cast<long long>(generator_set("S3_HSOP").size())});
  out.push_back({"krull dimension n=4 vs S4_HSOP_U9", krull_dimension(4),
                 static_cast<long long>(generator_set("S4_HSOP_U9").size())});
  out.push_back({"krull dimension n=5 vs S5_HSOP14_CONJ", krull_dimension(5),
                 static_cast<long long>(generator_set("S5_HSOP14_CONJ").size())});
  return out;
}

std::vector<std::string> Catalog::reduction_mismatches() const {
  std::set<Word> remaining = reduction_classes(table3_);
  for (const auto& w : words("S5_REDUNDANT9")) remaining.erase(transpose_trace_class(w));
  const auto table2 = word_classes(generator_set("S5_MSG89"));
  std::vector<std::string> out;
  for (const auto& w : remaining)
    if (!table2.contains(w)) out.push_back("only in reduction: " + w.to_string());
  for (const auto& w : table2)
    if (!remaining.contains(w)) out.push_back("only in table2: " + w.to_string());
  return out;
}

std::vector<StarViolation> Catalog::star_table3_check() const {
  std::vector<StarViolation> out;
  for (std::size_t i = 0; i < table3_.size(); ++i) {
    const auto& e = table3_[i];
    switch (e.kind) {
      case Table3Entry::Kind::kPair:
        if (cyclic_normal_form(star(e.first)) != cyclic_normal_form(*e.second)) {
          out.push_back({i, entry_text(e), "second word is not a rotation of star(first)"});
        }
        break;
      case Table3Entry::Kind::kSum:
        if (star(e.first) != *e.second) out.push_back({i, entry_text(e), "second summand is not star(first)"});
        break;
      case Table3Entry::Kind::kSingle:
        if (cyclic_normal_form(star(e.first)) != cyclic_normal_form(e.first)) {
          out.push_back({i, entry_text(e), "star(word) is not a rotation of the word"});
        }
        break;
    }
  }
  return out;
}

}  // namespace orthoinv
