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

#include "orthoinv/generators.hpp"

#include <algorithm>
#include <set>

#include "orthoinv/error.hpp"
#include "orthoinv/evaluate.hpp"
#include "parse_util.hpp"

namespace orthoinv {
namespace {

std::string rational_text(Rational r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// reach[i][a][b]: grade (a, b) is a sum of grades of generators i..n-1.
class Reachability {
 public:
  Reachability(std::span<const Grade> grades, Grade target)
      : n_(grades.size()), w_(static_cast<std::size_t>(target.x + 1)), h_(static_cast<std::size_t>(target.y + 1)),
        bits_((n_ + 1) * w_ * h_, false) {
    set(n_, 0, 0);
    for (std::size_t i = n_; i-- > 0;) {
      const Grade g = grades[i];
      for (int a = 0; a <= target.x; ++a) {
        for (int b = 0; b <= target.y; ++b) {
          bool r = get(i + 1, a, b);
          if (!r && a >= g.x && b >= g.y) r = get(i, a - g.x, b - g.y);
          if (r) set(i, a, b);
        }
      }
    }
  }

  bool get(std::size_t i, int a, int b) const {
    return bits_[(i * w_ + static_cast<std::size_t>(a)) * h_ + static_cast<std::size_t>(b)];
  }

 private:
  void set(std::size_t i, int a, int b) { bits_[(i * w_ + static_cast<std::size_t>(a)) * h_ + static_cast<std::size_t>(b)] = true; }

  std::size_t n_, w_, h_;
  std::vector<bool> bits_;
};

void enumerate_from(std::span<const Grade> grades, const Reachability& reach, std::size_t i, Grade remaining,
                    std::vector<MonomialFactor>& path, std::vector<GeneratorMonomial>& out) {
  if (remaining.x == 0 && remaining.y == 0) {
    out.push_back({path});
    return;
  }
  if (i == grades.size() || !reach.get(i, remaining.x, remaining.y)) return;
  const Grade g = grades[i];
  unsigned emax = 0;
  while (remaining.x >= g.x * static_cast<int>(emax + 1) && remaining.y >= g.y * static_cast<int>(emax + 1)) ++emax;
  for (unsigned e = emax + 1; e-- > 0;) {
    const Grade rest{remaining.x - g.x * static_cast<int>(e), remaining.y - g.y * static_cast<int>(e)};
    if (!reach.get(i + 1, rest.x, rest.y)) continue;
    if (e > 0) path.push_back({i, e});
    enumerate_from(grades, reach, i + 1, rest, path, out);
    if (e > 0) path.pop_back();
  }
}

GeneratorPolynomial parse_poly(detail::Cursor& in);

GeneratorPolynomial parse_factor(detail::Cursor& in) {
  GeneratorPolynomial base;
  if (in.accept('(')) {
    base = parse_poly(in);
    in.expect(')');
  } else if (std::isalpha(static_cast<unsigned char>(in.peek()))) {
    std::string label;
    const std::string_view t = in.text();
    std::size_t p = in.position();
    while (p < t.size() && std::isalpha(static_cast<unsigned char>(t[p]))) label += t[p++];
    while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) label += t[p++];
    in.advance(p - in.position());
    base = GeneratorPolynomial::variable(label);
  } else {
    in.fail("expected a label or '('");
  }
  return base.pow(static_cast<unsigned>(in.parse_exponent()));
}

bool starts_factor(detail::Cursor& in) {
  const char c = in.peek();
  return c == '(' || std::isalpha(static_cast<unsigned char>(c));
}

GeneratorPolynomial parse_term(detail::Cursor& in) {
  Rational c = 1;
  const bool has_coeff = in.peek_digit();
  if (has_coeff) {
    const auto num = static_cast<std::int64_t>(in.parse_uint());
    std::int64_t den = 1;
    if (in.accept('/')) den = static_cast<std::int64_t>(in.parse_uint());
    if (den == 0) in.fail("zero denominator");
    c = Rational(num, den);
  }
  if (!has_coeff && !starts_factor(in)) in.fail("expected a term");
  GeneratorPolynomial out = GeneratorPolynomial::constant(c);
  while (starts_factor(in)) out = out * parse_factor(in);
  return out;
}

GeneratorPolynomial parse_poly(detail::Cursor& in) {
  bool negative = in.accept('-');
  if (!negative) in.accept('+');
  GeneratorPolynomial out = parse_term(in);
  if (negative) out = out.scaled(-1);
  while (true) {
    if (in.accept('+')) {
      out = out + parse_term(in);
    } else if (in.accept('-')) {
      out = out - parse_term(in);
    } else {
      return out;
    }
  }
}

}  // namespace

std::string format_grade(Grade g, Grading grading) {
  if (grading == Grading::kTotal) return std::to_string(g.x);
  return "(" + std::to_string(g.x) + "," + std::to_string(g.y) + ")";
}

GeneratorSet::GeneratorSet(std::string name, std::size_t order, EvaluationMode mode, Grading grading,
                           std::vector<std::pair<std::string, InvariantExpression>> generators)
    : name_(std::move(name)), order_(order), mode_(mode), grading_(grading) {
  std::set<std::string> seen;
  for (auto& [label, expr] : generators) {
    if (label.empty()) throw Error(name_ + ": empty generator label");
    if (!seen.insert(label).second) throw Error(name_ + ": duplicate generator label " + label);
    if (expr.has_pfaffian_atoms() && order_ % 2 != 0) {
      throw DomainError(name_ + ": " + label + " uses Pf/pl atoms at odd order " + std::to_string(order_));
    }
    Grade g;
    if (grading_ == Grading::kTotal) {
      auto d = expr.total_degree(order_);
      if (!d) throw Error(name_ + ": generator " + label + " is not homogeneous");
      g = {*d, 0};
    } else {
      auto b = expr.bidegree(order_);
      if (!b) throw Error(name_ + ": generator " + label + " is not bihomogeneous (total-degree only)");
      g = *b;
    }
    if (g.total() <= 0) throw Error(name_ + ": generator " + label + " has non-positive degree");
    generators_.push_back({label, std::move(expr), g});
  }
}

std::vector<Grade> GeneratorSet::grades() const {
  std::vector<Grade> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.grade);
  return out;
}

std::vector<std::string> GeneratorSet::labels() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.label);
  return out;
}

std::optional<std::size_t> GeneratorSet::find(std::string_view label) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t GeneratorSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(name_ + ": unknown generator label " + std::string(label));
}

std::optional<Grade> GeneratorSet::grade_of(const InvariantExpression& e) const {
  if (grading_ == Grading::kTotal) {
    if (auto d = e.total_degree(order_)) return Grade{*d, 0};
    return std::nullopt;
  }
  return e.bidegree(order_);
}

GeneratorSet GeneratorSet::without(std::size_t index) const {
  std::vector<std::pair<std::string, InvariantExpression>> g;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i != index) g.emplace_back(generators_[i].label, generators_[i].expression);
  }
  return GeneratorSet(name_ + " without " + generators_.at(index).label, order_, mode_, grading_, std::move(g));
}

GeneratorSet GeneratorSet::subset(const std::vector<std::string>& labels, std::string name) const {
  std::vector<std::pair<std::string, InvariantExpression>> g;
  for (const auto& l : labels) {
    const auto& gen = generators_[index_of(l)];
    g.emplace_back(gen.label, gen.expression);
  }
  return GeneratorSet(std::move(name), order_, mode_, grading_, std::move(g));
}

GeneratorSet GeneratorSet::with_grading(Grading grading) const {
  std::vector<std::pair<std::string, InvariantExpression>> g;
  for (const auto& gen : generators_) g.emplace_back(gen.label, gen.expression);
  return GeneratorSet(name_, order_, mode_, grading, std::move(g));
}

Grade GeneratorMonomial::grade(std::span<const Grade> grades) const {
  Grade g;
  for (const auto& f : factors) g = g + grades[f.index] * static_cast<int>(f.exponent);
  return g;
}

std::string GeneratorMonomial::to_string(const GeneratorSet& set) const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    const std::string& l = set[f.index].label;
    const bool wrap = l.find_first_of("()^") != std::string::npos;
    out += wrap ? "[" + l + "]" : l;
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::vector<GeneratorMonomial> enumerate_monomials(std::span<const Grade> grades, Grade target) {
  std::vector<GeneratorMonomial> out;
  if (target.x < 0 || target.y < 0) return out;
  Reachability reach(grades, target);
  std::vector<MonomialFactor> path;
  enumerate_from(grades, reach, 0, target, path, out);
  return out;
}

std::vector<GeneratorMonomial> enumerate_monomials(const GeneratorSet& set, Grade target) {
  const auto g = set.grades();
  return enumerate_monomials(g, target);
}

MonomialEvaluator::MonomialEvaluator(std::vector<GeneratorMonomial> monomials) : monomials_(std::move(monomials)) {
  shared_prefix_.resize(monomials_.size(), 0);
  for (std::size_t k = 1; k < monomials_.size(); ++k) {
    const auto& a = monomials_[k - 1].factors;
    const auto& b = monomials_[k].factors;
    std::size_t j = 0;
    while (j < a.size() && j < b.size() && a[j] == b[j]) ++j;
    shared_prefix_[k] = j;
  }
}

void MonomialEvaluator::evaluate(const PrimeField& field, std::span<const FieldElement> values,
                                 std::span<FieldElement> out) const {
  std::vector<FieldElement> prefix(1, field.one());
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    const auto& f = monomials_[k].factors;
    prefix.resize(shared_prefix_[k] + 1);
    for (std::size_t j = shared_prefix_[k]; j < f.size(); ++j) {
      prefix.push_back(field.mul(prefix.back(), field.pow(values[f[j].index], f[j].exponent)));
    }
    out[k] = prefix[f.size()];
  }
}

GeneratorPolynomial::GeneratorPolynomial(std::vector<Term> terms) {
  std::map<Exponents, Rational> merged;
  for (auto& t : terms) {
    std::erase_if(t.exponents, [](const auto& kv) { return kv.second == 0; });
    merged[t.exponents] += t.coefficient;
  }
  for (auto& [e, c] : merged) {
    if (c != Rational(0)) terms_.push_back({c, e});
  }
}

GeneratorPolynomial GeneratorPolynomial::constant(Rational c) { return GeneratorPolynomial({{c, {}}}); }

GeneratorPolynomial GeneratorPolynomial::variable(const std::string& label) {
  return GeneratorPolynomial({{Rational(1), {{label, 1}}}});
}

std::vector<std::string> GeneratorPolynomial::labels() const {
  std::set<std::string> s;
  for (const auto& t : terms_)
    for (const auto& [l, e] : t.exponents) s.insert(l);
  return {s.begin(), s.end()};
}

GeneratorPolynomial GeneratorPolynomial::operator+(const GeneratorPolynomial& rhs) const {
  std::vector<Term> t = terms_;
  t.insert(t.end(), rhs.terms_.begin(), rhs.terms_.end());
  return GeneratorPolynomial(std::move(t));
}

GeneratorPolynomial GeneratorPolynomial::operator-(const GeneratorPolynomial& rhs) const {
  return *this + rhs.scaled(-1);
}

GeneratorPolynomial GeneratorPolynomial::operator*(const GeneratorPolynomial& rhs) const {
  std::vector<Term> t;
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      Exponents e = a.exponents;
      for (const auto& [l, k] : b.exponents) e[l] += k;
      t.push_back({a.coefficient * b.coefficient, std::move(e)});
    }
  }
  return GeneratorPolynomial(std::move(t));
}

GeneratorPolynomial GeneratorPolynomial::scaled(Rational k) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.coefficient *= k;
  return GeneratorPolynomial(std::move(t));
}

GeneratorPolynomial GeneratorPolynomial::pow(unsigned e) const {
  GeneratorPolynomial out = constant(1);
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::optional<Grade> GeneratorPolynomial::grade(const GeneratorSet& set) const {
  std::optional<Grade> g;
  for (const auto& t : terms_) {
    Grade d;
    for (const auto& [l, e] : t.exponents) d = d + set[set.index_of(l)].grade * static_cast<int>(e);
    if (g && *g != d) return std::nullopt;
    g = d;
  }
  return g;
}

int GeneratorPolynomial::max_total_degree(const GeneratorSet& set) const {
  int best = 0;
  for (const auto& t : terms_) {
    int d = 0;
    for (const auto& [l, e] : t.exponents) d += set[set.index_of(l)].grade.total() * static_cast<int>(e);
    best = std::max(best, d);
  }
  return best;
}

FieldElement GeneratorPolynomial::evaluate(const PrimeField& field, const GeneratorSet& set,
                                           std::span<const FieldElement> values) const {
  FieldElement total = field.zero();
  for (const auto& t : terms_) {
    FieldElement v = field.from_ratio(t.coefficient.numerator(), t.coefficient.denominator());
    for (const auto& [l, e] : t.exponents) v = field.mul(v, field.pow(values[set.index_of(l)], e));
    total = field.add(total, v);
  }
  return total;
}

std::string GeneratorPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const bool negative = t.coefficient < Rational(0);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? -t.coefficient : t.coefficient;
    std::string factors;
    for (const auto& [l, e] : t.exponents) {
      if (!factors.empty()) factors += " ";
      factors += l;
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (mag != Rational(1) || factors.empty()) out += rational_text(mag) + (factors.empty() ? "" : " ");
    out += factors;
  }
  return out;
}

bool operator==(const GeneratorPolynomial& a, const GeneratorPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient || a.terms_[i].exponents != b.terms_[i].exponents) {
      return false;
    }
  }
  return true;
}

GeneratorPolynomial parse_generator_polynomial(std::string_view text) {
  detail::Cursor in(text);
  if (in.at_end()) in.fail("empty polynomial");
  GeneratorPolynomial p = parse_poly(in);
  in.expect_end();
  return p;
}

std::vector<FieldElement> evaluate_generators(const PrimeField& field, const GeneratorSet& set, const SamplePoint& pt) {
  std::vector<FieldElement> v;
  v.reserve(set.size());
  for (const auto& g : set.generators()) v.push_back(evaluate_invariant(field, g.expression, pt));
  return v;
}

}  // namespace orthoinv
