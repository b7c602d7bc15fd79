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

#include "orthoinv/field.hpp"

namespace orthoinv {

/// a + b*eps with eps^2 = 0.
struct DualElement {
  FieldElement primal;
  FieldElement tangent;

  friend constexpr bool operator==(DualElement, DualElement) = default;
};

/// Forward-mode derivative ring over a PrimeField. Holds a reference to the
/// base field, which must outlive it.
class DualField {
 public:
  using value_type = DualElement;

  explicit DualField(const PrimeField& base) noexcept : base_(&base) {}

  const PrimeField& base() const noexcept { return *base_; }

  DualElement zero() const noexcept { return {}; }
  DualElement one() const noexcept { return {base_->one(), base_->zero()}; }
  DualElement from_int(std::int64_t v) const noexcept { return {base_->from_int(v), {}}; }
  DualElement embed(FieldElement a) const noexcept { return {a, {}}; }
  DualElement variable(FieldElement a) const noexcept { return {a, base_->one()}; }

  DualElement add(DualElement a, DualElement b) const noexcept {
    return {base_->add(a.primal, b.primal), base_->add(a.tangent, b.tangent)};
  }
  DualElement sub(DualElement a, DualElement b) const noexcept {
    return {base_->sub(a.primal, b.primal), base_->sub(a.tangent, b.tangent)};
  }
  DualElement neg(DualElement a) const noexcept {
    return {base_->neg(a.primal), base_->neg(a.tangent)};
  }
  DualElement mul(DualElement a, DualElement b) const noexcept {
    const PrimeField& f = *base_;
    return {f.mul(a.primal, b.primal),
            f.add(f.mul(a.primal, b.tangent), f.mul(a.tangent, b.primal))};
  }
  DualElement sub_mul(DualElement a, DualElement b, DualElement c) const noexcept {
    return sub(a, mul(b, c));
  }
  /// Requires an invertible primal part.
  DualElement inv(DualElement a) const {
    const PrimeField& f = *base_;
    FieldElement ip = f.inv(a.primal);
    return {ip, f.neg(f.mul(a.tangent, f.mul(ip, ip)))};
  }
  DualElement div(DualElement a, DualElement b) const { return mul(a, inv(b)); }
  bool is_zero(DualElement a) const noexcept {
    return a.primal.value == 0 && a.tangent.value == 0;
  }

 private:
  const PrimeField* base_;
};

}  // namespace orthoinv
