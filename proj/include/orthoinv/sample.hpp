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

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "orthoinv/field.hpp"
#include "orthoinv/linalg.hpp"
#include "orthoinv/random.hpp"

namespace orthoinv {

/// How the second matrix y of a sample relates to x.
enum class EvaluationMode {
  kTwoGeneric,      ///< x and y independent
  kTransposeBound,  ///< y = x^T
};

std::string_view to_string(EvaluationMode mode) noexcept;

struct EvaluationContext {
  std::size_t order = 3;
  PrimeField field{};
  std::uint64_t seed = 42;
  EvaluationMode mode = EvaluationMode::kTransposeBound;

  /// Same context with a different master seed.
  EvaluationContext with_seed(std::uint64_t s) const {
    EvaluationContext c = *this;
    c.seed = s;
    return c;
  }
};

/// A point (x, y) of pairs of traceless matrices.
struct SamplePoint {
  FieldMatrix x;
  FieldMatrix y;
  EvaluationMode mode = EvaluationMode::kTransposeBound;
};

/// Uniform traceless x (and y in two-generic mode): off-diagonal entries and
/// the first n-1 diagonal entries are uniform, the last diagonal entry
/// cancels the trace. Throws DomainError for n < 2.
SamplePoint random_traceless(const EvaluationContext& ctx, Rng& rng);

/// Point number `stream` of the context: drawn from derive_seed(ctx.seed, stream).
SamplePoint random_traceless(const EvaluationContext& ctx, std::uint64_t stream);

/// Builds a point from a given x (y = x^T) or from x and y.
SamplePoint make_point(FieldMatrix x);
SamplePoint make_point(FieldMatrix x, FieldMatrix y);

/// Uniform skew-symmetric n x n matrix.
FieldMatrix random_skew(const PrimeField& field, std::size_t n, Rng& rng);

/// (I - S)(I + S)^{-1}; nullopt when I + S is singular.
std::optional<FieldMatrix> cayley_transform(const PrimeField& field, const FieldMatrix& skew);

/// Random element of SO_n(F_p) via the Cayley transform of a random skew
/// matrix. Throws Error after repeated singular draws.
FieldMatrix cayley_special_orthogonal(const PrimeField& field, std::size_t n, Rng& rng);

/// q x q^T (and q y q^T); the conjugation action of an orthogonal q.
SamplePoint conjugate(const PrimeField& field, const FieldMatrix& q, const SamplePoint& pt);

}  // namespace orthoinv
