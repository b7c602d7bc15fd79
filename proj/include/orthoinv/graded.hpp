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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthoinv/generators.hpp"
#include "orthoinv/linalg.hpp"
#include "orthoinv/series.hpp"

namespace orthoinv {

/// Field, master seed and evaluation-matrix policy shared by all analyses.
/// Point k of any analysis is drawn from derive_seed(seed, k), so results do
/// not depend on `workers`.
struct AnalysisContext {
  PrimeField field{};
  std::uint64_t seed = 42;
  /// Extra sample points beyond the number of columns.
  std::size_t surplus = 8;
  unsigned workers = 1;

  EvaluationContext evaluation_context(const GeneratorSet& set) const {
    return {set.order(), field, seed, set.mode()};
  }
  AnalysisContext with_seed(std::uint64_t s) const {
    AnalysisContext c = *this;
    c.seed = s;
    return c;
  }
};

/// Sample points 0..count-1 of a set together with all generator values.
/// Filled by one owner (in parallel internally), then shared read-only.
class PointCache {
 public:
  PointCache(const GeneratorSet& set, const AnalysisContext& ctx);

  void ensure(std::size_t count);
  std::size_t size() const noexcept { return points_.size(); }
  const SamplePoint& point(std::size_t k) const { return points_.at(k); }
  std::span<const FieldElement> values(std::size_t k) const { return values_.at(k); }
  const GeneratorSet& set() const noexcept { return *set_; }
  const AnalysisContext& context() const noexcept { return ctx_; }

 private:
  const GeneratorSet* set_;
  AnalysisContext ctx_;
  std::vector<SamplePoint> points_;
  std::vector<std::vector<FieldElement>> values_;
};

/// Extra evaluation column: value at cache point k.
using ExtraColumn = std::function<FieldElement(const PointCache&, std::size_t)>;

/// Rows = points 0..rows-1, columns = monomials (over the cache's set) then
/// extras. The cache is extended to `rows` first.
FieldMatrix evaluation_matrix(PointCache& cache, const MonomialEvaluator& monomials,
                              const std::vector<ExtraColumn>& extras, std::size_t rows);

struct DimensionRow {
  Grade grade;
  std::size_t monomials = 0;
  std::size_t rank = 0;
  std::optional<BigInt> expected;
  bool match = true;
};

struct DimensionReport {
  std::string set;
  Grading grading = Grading::kTotal;
  std::vector<DimensionRow> rows;
  bool all_match() const;
};

/// Rank of the evaluation matrix of all monomials of grade `target`
/// (monomials + surplus points).
DimensionRow graded_dimension(const GeneratorSet& set, Grade target, const AnalysisContext& ctx,
                              std::optional<BigInt> expected = std::nullopt);
DimensionRow graded_dimension(PointCache& cache, Grade target, std::optional<BigInt> expected = std::nullopt);

/// Every grade of total degree <= max_total (in a bigraded set: every (i, j)
/// with i + j <= max_total). `expected` entries are compared when present.
DimensionReport graded_dimensions(const GeneratorSet& set, int max_total, const AnalysisContext& ctx,
                                  const CoefficientTable* expected = nullptr);

enum class MembershipVerdict {
  kCertifiedIndependent,  ///< rank separation: a sound non-membership proof
  kProbablyMember,        ///< rank equality: probabilistic
};

std::string_view to_string(MembershipVerdict v) noexcept;

struct MembershipCertificate {
  std::string target;
  Grade grade;
  MembershipVerdict verdict = MembershipVerdict::kProbablyMember;
  std::size_t rank_without = 0;
  std::size_t rank_with = 0;
  std::size_t monomials = 0;
  std::size_t points = 0;
  std::uint64_t seed = 0;
};

/// Something whose membership in the subalgebra is tested.
struct MembershipTarget {
  std::string label;
  Grade grade;
  /// Value at a point of the cache.
  ExtraColumn value;
};

/// Target given by an invariant expression; throws if it is not homogeneous
/// in the set's grading.
MembershipTarget membership_target(const GeneratorSet& set, const InvariantExpression& e, std::string label);
/// Target given by a polynomial in the set's generators (the constant 1 is
/// allowed).
MembershipTarget membership_target(const GeneratorSet& set, const GeneratorPolynomial& p, std::string label);

/// Ranks of {monomials of the target's grade} with and without the target
/// column, at the same points.
MembershipCertificate is_member(const MembershipTarget& target, const GeneratorSet& set, const AnalysisContext& ctx);

/// Same verdicts as is_member on each target. Targets of one grade share a
/// single elimination; a target is re-tested alone only when an earlier
/// target of its grade raised the rank.
std::vector<MembershipCertificate> is_member_each(const std::vector<MembershipTarget>& targets,
                                                  const GeneratorSet& set, const AnalysisContext& ctx);

/// Membership of generator `index` in the subalgebra generated by the others.
MembershipCertificate generator_membership(PointCache& cache, std::size_t index);

/// One certificate per generator; a minimal set certifies every generator
/// independent.
std::vector<MembershipCertificate> minimality_report(const GeneratorSet& set, const AnalysisContext& ctx);

struct JacobianReport {
  std::size_t generators = 0;
  std::size_t coordinates = 0;
  std::vector<std::size_t> ranks;  ///< one per seed
  std::size_t rank = 0;            ///< maximum
  bool consistent() const;
};

/// Rank of d(generators)/d(coordinates) at random points via dual numbers.
/// Transpose-bound sets use the n^2-1 coordinates of x; two-generic sets the
/// 2(n^2-1) coordinates of (x, y). Seeds ctx.seed + k, k < seeds.
JacobianReport jacobian_rank(const GeneratorSet& set, const AnalysisContext& ctx, int seeds = 3);

struct IdentityReport {
  std::size_t trials = 0;
  std::size_t nonzero = 0;
  std::optional<std::size_t> first_failure;
  int degree = 0;                 ///< degree in matrix coordinates
  double log10_trial_bound = 0;   ///< log10(degree / p)
  double log10_false_pass = 0;    ///< trials * log10_trial_bound
  bool holds() const { return nonzero == 0; }
};

/// Evaluates `relation` at `trials` independent points.
IdentityReport verify_polynomial_identity(const GeneratorPolynomial& relation, const GeneratorSet& set,
                                          std::size_t trials, const AnalysisContext& ctx);

struct HironakaRow {
  int degree = 0;
  std::size_t products = 0;
  std::size_t rank = 0;
  BigInt coefficient;
  std::size_t algebra_dimension = 0;
  bool count_ok = false;     ///< products == series coefficient
  bool free_ok = false;      ///< rank == products
  bool spanning_ok = false;  ///< rank == dimension of the full algebra
  bool ok() const { return count_ok && free_ok && spanning_ok; }
};

struct HironakaReport {
  std::vector<int> basis_degrees;
  std::vector<HironakaRow> rows;
  bool passed() const;
  std::optional<int> first_failure() const;
};

/// Checks that {hsop monomial * basis element} is a basis of each graded
/// piece of the algebra generated by `set`, for degrees 0..max_degree.
/// `hsop` labels and every basis label must belong to `set`; total grading.
HironakaReport hironaka_check(const GeneratorSet& set, const std::vector<std::string>& hsop,
                              const std::vector<GeneratorPolynomial>& basis, int max_degree,
                              const CoefficientTable& series, const AnalysisContext& ctx);

struct RepairTarget {
  int degree = 0;
  std::vector<std::string> candidates;  ///< tried, in order
  std::vector<std::string> passing;     ///< those raising the module rank
  std::vector<std::string> rejected;    ///< raised the rank but broke freeness later
  std::optional<std::string> accepted;
  std::size_t rank_before = 0;
};

struct RepairReport {
  std::vector<RepairTarget> targets;
  std::vector<GeneratorPolynomial> completion;  ///< fixed + accepted
  bool success() const;
};

struct RepairOptions {
  /// Tried before products of pool generators, in order.
  std::vector<GeneratorPolynomial> preferred;
  /// When >= 0, a candidate is accepted only if the enlarged basis stays
  /// free (rank == number of products) at every degree up to this one.
  int lookahead = -1;
};

/// Greedy completion of a module basis: for each target degree (ascending),
/// accepts the first candidate of that degree (preferred elements, then
/// products of pool generators) that raises the rank of the module span.
RepairReport repair_module_basis(const GeneratorSet& set, const std::vector<std::string>& hsop,
                                 const std::vector<GeneratorPolynomial>& fixed, std::vector<int> target_degrees,
                                 const std::vector<std::string>& pool, const AnalysisContext& ctx,
                                 const RepairOptions& options = {});

/// Splits the multiset of numerator exponents against a basis: elements
/// whose degree is still available are kept, the remaining exponents become
/// repair targets.
struct BasisSplit {
  std::vector<GeneratorPolynomial> kept;
  std::vector<GeneratorPolynomial> excess;
  std::vector<int> missing_degrees;
};
BasisSplit split_basis_by_degrees(const GeneratorSet& set, const std::vector<GeneratorPolynomial>& basis,
                                  std::vector<int> numerator_degrees);

}  // namespace orthoinv
