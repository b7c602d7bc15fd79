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

#include "orthoinv/field.hpp"

#include "orthoinv/random.hpp"

namespace orthoinv {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are exact for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus < 5 || modulus >= (std::uint64_t{1} << 62) || !is_prime(modulus)) {
    throw DomainError("modulus " + std::to_string(modulus) + " is not a prime in [5, 2^62)");
  }
  if (modulus == kMersenne61) {
    kind_ = Kind::kMersenne61;
  } else if (modulus < (std::uint64_t{1} << 32)) {
    kind_ = Kind::kSmall;
  } else {
    kind_ = Kind::kGeneric;
  }
}

FieldElement PrimeField::from_int(std::int64_t v) const noexcept {
  if (v >= 0) return {static_cast<std::uint64_t>(v) % p_};
  // -(v + 1) avoids overflow at INT64_MIN.
  std::uint64_t m = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p_;
  return {m == 0 ? 0 : p_ - m};
}

FieldElement PrimeField::from_ratio(std::int64_t num, std::int64_t den) const {
  FieldElement d = from_int(den);
  if (d.value == 0) {
    throw DomainError("denominator " + std::to_string(den) + " vanishes modulo " +
                      std::to_string(p_) + "; choose another prime");
  }
  return mul(from_int(num), inv(d));
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const noexcept {
  FieldElement r = one();
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0) throw DomainError("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

FieldElement PrimeField::uniform(Rng& rng) const { return {rng.below(p_)}; }

std::int64_t PrimeField::centered(FieldElement a) const noexcept {
  if (a.value > p_ / 2) return -static_cast<std::int64_t>(p_ - a.value);
  return static_cast<std::int64_t>(a.value);
}

}  // namespace orthoinv
