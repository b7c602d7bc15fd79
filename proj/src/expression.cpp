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

#include "orthoinv/expression.hpp"

#include <algorithm>
#include <map>

#include "orthoinv/error.hpp"
#include "parse_util.hpp"

namespace orthoinv {
namespace {

bool starts_factor(char c) { return c == 'x' || c == 'y' || c == 'A' || c == 'B' || c == '('; }

MatrixExpression power(const MatrixExpression& base, std::uint64_t e) {
  MatrixExpression out = base;
  for (std::uint64_t k = 1; k < e; ++k) out = out * base;
  return out;
}

MatrixExpression parse_mexpr(detail::Cursor& in);

MatrixExpression parse_mfactor(detail::Cursor& in) {
  MatrixExpression base;
  const char c = in.peek();
  if (c == 'x' || c == 'A') {
    in.advance(1);
    base = MatrixExpression(Word({Letter::kX}));
  } else if (c == 'y' || c == 'B') {
    in.advance(1);
    base = MatrixExpression(Word({Letter::kY}));
  } else if (c == '(') {
    in.advance(1);
    base = parse_mexpr(in);
    in.expect(')');
  } else if (c == '\0') {
    in.fail("unexpected end of expression");
  } else {
    in.fail(std::string("unknown character '") + c + "'");
  }
  return power(base, in.parse_exponent());
}

MatrixExpression parse_mterm(detail::Cursor& in) {
  std::int64_t coeff = 1;
  if (in.peek_digit()) coeff = static_cast<std::int64_t>(in.parse_uint());
  if (!starts_factor(in.peek())) in.fail("expected a letter or '('");
  MatrixExpression out = parse_mfactor(in);
  while (starts_factor(in.peek())) out = out * parse_mfactor(in);
  return out.scaled(coeff);
}

MatrixExpression parse_mexpr(detail::Cursor& in) {
  bool negative = in.accept('-');
  if (!negative) in.accept('+');
  MatrixExpression out = parse_mterm(in);
  if (negative) out = out.scaled(-1);
  while (true) {
    if (in.accept('+')) {
      out = out + parse_mterm(in);
    } else if (in.accept('-')) {
      out = out - parse_mterm(in);
    } else {
      return out;
    }
  }
}

InvariantAtom parse_atom(detail::Cursor& in) {
  InvariantAtom atom;
  std::size_t arity = 1;
  if (in.starts_with("tr")) {
    atom.kind = AtomKind::kTrace;
  } else if (in.starts_with("Pf")) {
    atom.kind = AtomKind::kPf;
  } else if (in.starts_with("pl")) {
    atom.kind = AtomKind::kPl;
    arity = 2;
  } else {
    in.fail("expected 'tr', 'Pf' or 'pl'");
  }
  in.advance(2);
  in.expect('(');
  atom.args.push_back(parse_mexpr(in));
  while (in.accept(',')) atom.args.push_back(parse_mexpr(in));
  if (atom.args.size() != arity) {
    in.fail(std::string(to_string(atom.kind)) + " takes " + std::to_string(arity) +
            " argument(s), got " + std::to_string(atom.args.size()));
  }
  in.expect(')');
  return atom;
}

Rational parse_coefficient(detail::Cursor& in) {
  if (!in.peek_digit()) return 1;
  const auto num = static_cast<std::int64_t>(in.parse_uint());
  std::int64_t den = 1;
  if (in.accept('/')) {
    const std::size_t at = in.position();
    den = static_cast<std::int64_t>(in.parse_uint());
    if (den == 0) throw ParseError("zero denominator", at);
  }
  return Rational(num, den);
}

std::string rational_text(Rational r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

MatrixExpression::MatrixExpression(std::vector<WordTerm> terms) {
  std::map<Word, std::int64_t> merged;
  for (auto& t : terms) merged[t.word] += t.coefficient;
  for (auto& [w, c] : merged) {
    if (c != 0) terms_.push_back({c, w});
  }
}

std::optional<int> MatrixExpression::degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto d = static_cast<int>(terms_.front().word.size());
  for (const auto& t : terms_) {
    if (static_cast<int>(t.word.size()) != d) return std::nullopt;
  }
  return d;
}

std::optional<Bidegree> MatrixExpression::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  const Bidegree b = terms_.front().word.bidegree();
  for (const auto& t : terms_) {
    if (t.word.bidegree() != b) return std::nullopt;
  }
  return b;
}

MatrixExpression MatrixExpression::operator+(const MatrixExpression& rhs) const {
  std::vector<WordTerm> t = terms_;
  t.insert(t.end(), rhs.terms_.begin(), rhs.terms_.end());
  return MatrixExpression(std::move(t));
}

MatrixExpression MatrixExpression::operator-(const MatrixExpression& rhs) const {
  return *this + rhs.scaled(-1);
}

MatrixExpression MatrixExpression::operator*(const MatrixExpression& rhs) const {
  std::vector<WordTerm> t;
  t.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) t.push_back({a.coefficient * b.coefficient, a.word * b.word});
  return MatrixExpression(std::move(t));
}

MatrixExpression MatrixExpression::scaled(std::int64_t k) const {
  std::vector<WordTerm> t = terms_;
  for (auto& term : t) term.coefficient *= k;
  return MatrixExpression(std::move(t));
}

std::string MatrixExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const std::int64_t c = terms_[i].coefficient;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += terms_[i].word.to_string();
  }
  return out;
}

MatrixExpression parse_matrix_expression(std::string_view text) {
  detail::Cursor in(text);
  MatrixExpression e = parse_mexpr(in);
  in.expect_end();
  return e;
}

std::string_view to_string(AtomKind kind) noexcept {
  switch (kind) {
    case AtomKind::kTrace:
      return "tr";
    case AtomKind::kPf:
      return "Pf";
    case AtomKind::kPl:
    default:
      return "pl";
  }
}

InvariantExpression::InvariantExpression(std::vector<InvariantAtom> atoms) {
  using Key = std::pair<AtomKind, std::vector<MatrixExpression>>;
  std::map<Key, Rational> merged;
  for (auto& a : atoms) {
    if (a.coefficient == Rational(0)) continue;
    if (std::any_of(a.args.begin(), a.args.end(), [](const auto& e) { return e.is_zero(); })) continue;
    if (a.kind == AtomKind::kTrace) {
      for (const auto& t : a.args.at(0).terms()) {
        merged[{AtomKind::kTrace, {MatrixExpression(t.word)}}] += a.coefficient * t.coefficient;
      }
    } else {
      merged[{a.kind, a.args}] += a.coefficient;
    }
  }
  for (auto& [key, c] : merged) {
    if (c != Rational(0)) atoms_.push_back({c, key.first, key.second});
  }
}

InvariantExpression InvariantExpression::trace(const MatrixExpression& e) {
  return InvariantExpression({{Rational(1), AtomKind::kTrace, {e}}});
}

bool InvariantExpression::has_pfaffian_atoms() const noexcept {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [](const auto& a) { return a.kind != AtomKind::kTrace; });
}

std::optional<int> InvariantExpression::total_degree(std::size_t order) const {
  std::optional<int> result;
  for (const auto& a : atoms_) {
    std::optional<int> d;
    if (a.kind == AtomKind::kTrace) {
      d = a.args[0].degree();
    } else if (a.kind == AtomKind::kPf) {
      if (auto e = a.args[0].degree()) d = *e * static_cast<int>(order / 2);
    } else {
      auto e1 = a.args[0].degree();
      auto e2 = a.args[1].degree();
      if (e1 && e2) d = *e1 + *e2;
    }
    if (!d || (result && *result != *d)) return std::nullopt;
    result = d;
  }
  return result;
}

std::optional<Bidegree> InvariantExpression::bidegree(std::size_t order) const {
  std::optional<Bidegree> result;
  for (const auto& a : atoms_) {
    std::optional<Bidegree> b;
    if (a.kind == AtomKind::kTrace) {
      b = a.args[0].bidegree();
    } else if (a.kind == AtomKind::kPf) {
      if (auto e = a.args[0].bidegree()) b = *e * static_cast<int>(order / 2);
    } else {
      auto e1 = a.args[0].bidegree();
      auto e2 = a.args[1].bidegree();
      if (e1 && e2) b = *e1 + *e2;
    }
    if (!b || (result && *result != *b)) return std::nullopt;
    result = b;
  }
  return result;
}

InvariantExpression InvariantExpression::operator+(const InvariantExpression& rhs) const {
  std::vector<InvariantAtom> a = atoms_;
  a.insert(a.end(), rhs.atoms_.begin(), rhs.atoms_.end());
  return InvariantExpression(std::move(a));
}

InvariantExpression InvariantExpression::scaled(Rational k) const {
  std::vector<InvariantAtom> a = atoms_;
  for (auto& atom : a) atom.coefficient *= k;
  return InvariantExpression(std::move(a));
}

std::string InvariantExpression::to_string() const {
  if (atoms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto& a = atoms_[i];
    const bool negative = a.coefficient < Rational(0);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? -a.coefficient : a.coefficient;
    if (mag != Rational(1)) out += rational_text(mag) + " ";
    out += orthoinv::to_string(a.kind);
    out += "(";
    for (std::size_t k = 0; k < a.args.size(); ++k) {
      if (k > 0) out += ", ";
      out += a.args[k].to_string();
    }
    out += ")";
  }
  return out;
}

bool operator==(const InvariantExpression& a, const InvariantExpression& b) {
  if (a.atoms_.size() != b.atoms_.size()) return false;
  for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
    const auto& x = a.atoms_[i];
    const auto& y = b.atoms_[i];
    if (x.coefficient != y.coefficient || x.kind != y.kind || x.args != y.args) return false;
  }
  return true;
}

InvariantExpression parse_invariant(std::string_view text) {
  detail::Cursor in(text);
  if (in.at_end()) in.fail("empty invariant expression");
  std::vector<InvariantAtom> atoms;
  bool negative = in.accept('-');
  if (!negative) in.accept('+');
  while (true) {
    Rational c = parse_coefficient(in);
    InvariantAtom atom = parse_atom(in);
    atom.coefficient = negative ? -c : c;
    atoms.push_back(std::move(atom));
    if (in.accept('+')) {
      negative = false;
    } else if (in.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  in.expect_end();
  return InvariantExpression(std::move(atoms));
}

}  // namespace orthoinv
