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

#include "orthoinv/word.hpp"

#include <algorithm>

#include "orthoinv/error.hpp"
#include "parse_util.hpp"

namespace orthoinv {
namespace {

std::vector<Letter> parse_letters(detail::Cursor& in);

std::vector<Letter> parse_factor(detail::Cursor& in) {
  std::vector<Letter> base;
  const char c = in.peek();
  if (c == 'x' || c == 'A') {
    in.advance(1);
    base = {Letter::kX};
  } else if (c == 'y' || c == 'B') {
    in.advance(1);
    base = {Letter::kY};
  } else if (c == '(') {
    in.advance(1);
    base = parse_letters(in);
    in.expect(')');
  } else if (c == '\0') {
    in.fail("unexpected end of word");
  } else {
    in.fail(std::string("unknown character '") + c + "'");
  }
  const std::uint64_t e = in.parse_exponent();
  std::vector<Letter> out;
  out.reserve(base.size() * e);
  for (std::uint64_t k = 0; k < e; ++k) out.insert(out.end(), base.begin(), base.end());
  return out;
}

std::vector<Letter> parse_letters(detail::Cursor& in) {
  std::vector<Letter> out;
  do {
    auto f = parse_factor(in);
    out.insert(out.end(), f.begin(), f.end());
    const char c = in.peek();
    if (c != 'x' && c != 'y' && c != 'A' && c != 'B' && c != '(') break;
  } while (true);
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw ParseError("empty word", 0);
}

Bidegree Word::bidegree() const noexcept {
  Bidegree b;
  for (Letter l : letters_) (l == Letter::kX ? b.x : b.y) += 1;
  return b;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    out += letters_[i] == Letter::kX ? 'x' : 'y';
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> l = letters_;
  l.insert(l.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(l));
}

Word parse_word(std::string_view text) {
  detail::Cursor in(text);
  if (in.at_end()) throw ParseError("empty word", 0);
  Word w(parse_letters(in));
  in.expect_end();
  return w;
}

Word star(const Word& w) {
  std::vector<Letter> l(w.letters().rbegin(), w.letters().rend());
  for (Letter& c : l) c = c == Letter::kX ? Letter::kY : Letter::kX;
  return Word(std::move(l));
}

Word cyclic_normal_form(const Word& w) {
  const auto& l = w.letters();
  std::vector<Letter> best = l;
  std::vector<Letter> rot(l.size());
  for (std::size_t k = 1; k < l.size(); ++k) {
    std::rotate_copy(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k), l.end(), rot.begin());
    if (rot < best) best = rot;
  }
  return Word(std::move(best));
}

Word transpose_trace_class(const Word& w) {
  return std::min(cyclic_normal_form(w), cyclic_normal_form(star(w)));
}

}  // namespace orthoinv
