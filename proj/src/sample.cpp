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

#include "orthoinv/sample.hpp"

namespace orthoinv {
namespace {

constexpr int kCayleyRetries = 64;

FieldMatrix random_traceless_matrix(const PrimeField& f, std::size_t n, Rng& rng) {
  FieldMatrix m(n, n);
  FieldElement diag_sum = f.zero();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == n - 1 && j == n - 1) continue;
      m(i, j) = f.uniform(rng);
      if (i == j) diag_sum = f.add(diag_sum, m(i, j));
    }
  }
  m(n - 1, n - 1) = f.neg(diag_sum);
  return m;
}

}  // namespace

std::string_view to_string(EvaluationMode mode) noexcept {
  return mode == EvaluationMode::kTwoGeneric ? "two-generic" : "transpose-bound";
}

SamplePoint random_traceless(const EvaluationContext& ctx, Rng& rng) {
  if (ctx.order < 2) throw DomainError("matrix order must be at least 2");
  SamplePoint pt;
  pt.mode = ctx.mode;
  pt.x = random_traceless_matrix(ctx.field, ctx.order, rng);
  pt.y = ctx.mode == EvaluationMode::kTransposeBound ? transpose(pt.x)
                                                     : random_traceless_matrix(ctx.field, ctx.order, rng);
  return pt;
}

SamplePoint random_traceless(const EvaluationContext& ctx, std::uint64_t stream) {
  Rng rng(derive_seed(ctx.seed, stream));
  return random_traceless(ctx, rng);
}

SamplePoint make_point(FieldMatrix x) {
  FieldMatrix y = transpose(x);
  return {std::move(x), std::move(y), EvaluationMode::kTransposeBound};
}

SamplePoint make_point(FieldMatrix x, FieldMatrix y) {
  if (!x.square() || x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionError("sample point matrices must be square of equal order");
  }
  return {std::move(x), std::move(y), EvaluationMode::kTwoGeneric};
}

FieldMatrix random_skew(const PrimeField& f, std::size_t n, Rng& rng) {
  FieldMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s(i, j) = f.uniform(rng);
      s(j, i) = f.neg(s(i, j));
    }
  }
  return s;
}

std::optional<FieldMatrix> cayley_transform(const PrimeField& f, const FieldMatrix& skew) {
  const FieldMatrix id = identity(f, skew.rows());
  auto inv = inverse(f, add(f, id, skew));
  if (!inv) return std::nullopt;
  return multiply(f, subtract(f, id, skew), *inv);
}

FieldMatrix cayley_special_orthogonal(const PrimeField& f, std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < kCayleyRetries; ++attempt) {
    if (auto q = cayley_transform(f, random_skew(f, n, rng))) return *q;
  }
  throw Error("Cayley transform: I + S singular in " + std::to_string(kCayleyRetries) + " draws");
}

SamplePoint conjugate(const PrimeField& f, const FieldMatrix& q, const SamplePoint& pt) {
  const FieldMatrix qt = transpose(q);
  SamplePoint out;
  out.mode = pt.mode;
  out.x = multiply(f, multiply(f, q, pt.x), qt);
  out.y = pt.mode == EvaluationMode::kTransposeBound ? transpose(out.x)
                                                     : multiply(f, multiply(f, q, pt.y), qt);
  return out;
}

}  // namespace orthoinv
