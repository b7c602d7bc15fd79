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

#include <cstdint>
#include <string>

#include "orthoinv/error.hpp"

namespace orthoinv {

__extension__ using uint128 = unsigned __int128;

class Rng;

/// Residue in [0, p). Carries no modulus; all arithmetic goes through a
/// PrimeField.
struct FieldElement {
  std::uint64_t value = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

/// Arithmetic modulo a prime p < 2^62.
///
/// The Mersenne primes 2^61 - 1 and 2^31 - 1 take dedicated reduction
/// paths; any other prime falls back to 128-bit division.
class PrimeField {
 public:
  using value_type = FieldElement;

  static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
  static constexpr std::uint64_t kMersenne31 = (std::uint64_t{1} << 31) - 1;

  /// Throws DomainError unless `modulus` is a prime in [5, 2^62).
  explicit PrimeField(std::uint64_t modulus = kMersenne61);

  std::uint64_t modulus() const noexcept { return p_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement from_int(std::int64_t v) const noexcept;
  FieldElement from_uint(std::uint64_t v) const noexcept { return {v % p_}; }
  /// num / den; throws DomainError when den vanishes modulo p.
  FieldElement from_ratio(std::int64_t num, std::int64_t den) const;
  FieldElement embed(FieldElement a) const noexcept { return a; }
  const PrimeField& base() const noexcept { return *this; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    std::uint64_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElement neg(FieldElement a) const noexcept {
    return {a.value == 0 ? 0 : p_ - a.value};
  }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    switch (kind_) {
      case Kind::kMersenne61: {
        uint128 prod = static_cast<uint128>(a.value) * b.value;
        std::uint64_t lo = static_cast<std::uint64_t>(prod) & kMersenne61;
        std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
        std::uint64_t s = lo + hi;
        return {s >= kMersenne61 ? s - kMersenne61 : s};
      }
      case Kind::kSmall:
        return {(a.value * b.value) % p_};
      case Kind::kGeneric:
      default:
        return {static_cast<std::uint64_t>(
            (static_cast<uint128>(a.value) * b.value) % p_)};
    }
  }
  /// a - b*c, the elimination kernel.
  FieldElement sub_mul(FieldElement a, FieldElement b, FieldElement c) const noexcept {
    return sub(a, mul(b, c));
  }
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;
  /// Throws DomainError on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  bool is_zero(FieldElement a) const noexcept { return a.value == 0; }

  /// Uniform element of [0, p).
  FieldElement uniform(Rng& rng) const;

  /// Centered representative in (-p/2, p/2], for printing small values.
  std::int64_t centered(FieldElement a) const noexcept;

  std::string to_string(FieldElement a) const { return std::to_string(a.value); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  enum class Kind { kMersenne61, kSmall, kGeneric };

  std::uint64_t p_;
  Kind kind_;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

}  // namespace orthoinv
