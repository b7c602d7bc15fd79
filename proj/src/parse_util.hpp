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

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "orthoinv/error.hpp"

namespace orthoinv::detail {

/// Whitespace-skipping character cursor shared by the text grammars.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t position() const noexcept { return pos_; }
  std::string_view text() const noexcept { return text_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_with(std::string_view s) {
    skip_space();
    return text_.substr(pos_).starts_with(s);
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void advance(std::size_t n) { pos_ += n; }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t parse_uint() {
    if (!peek_digit()) fail("expected an unsigned integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  /// '^' uint, with the exponent required to be positive; 1 when absent.
  std::uint64_t parse_exponent() {
    if (!accept('^')) return 1;
    const std::size_t at = (skip_space(), pos_);
    const std::uint64_t e = parse_uint();
    if (e == 0) throw ParseError("exponent must be at least 1", at);
    if (e > 4096) throw ParseError("exponent too large", at);
    return e;
  }

  void expect_end() {
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_space();
    throw ParseError(message, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace orthoinv::detail
