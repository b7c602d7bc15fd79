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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orthoinv {

enum class Letter : std::uint8_t { kX = 0, kY = 1 };

/// (#x, #y).
struct Bidegree {
  int x = 0;
  int y = 0;

  int total() const noexcept { return x + y; }
  Bidegree operator+(Bidegree o) const noexcept { return {x + o.x, y + o.y}; }
  Bidegree operator*(int k) const noexcept { return {x * k, y * k}; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Nonempty word in the letters x, y.
class Word {
 public:
  /// Throws ParseError(…, 0) on an empty letter sequence.
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  Bidegree bidegree() const noexcept;

  /// Run-length form with caret exponents, e.g. "x^4y^2xy".
  std::string to_string() const;

  Word operator*(const Word& rhs) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// word := factor+ ; factor := letter ('^' uint)? | '(' word ')' ('^' uint)?
/// letter := 'x' | 'y' | 'A' | 'B' (A aliases x, B aliases y). Exponents
/// must be at least 1. Whitespace is ignored.
Word parse_word(std::string_view text);

/// Swap x and y, then reverse.
Word star(const Word& w);

/// Lexicographically least rotation (x < y).
Word cyclic_normal_form(const Word& w);

/// Canonical representative of the trace of w when y = x^T: the smaller of
/// the cyclic normal forms of w and star(w).
Word transpose_trace_class(const Word& w);

}  // namespace orthoinv
