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

#include "orthoinv/graded.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "orthoinv/dual.hpp"
#include "orthoinv/error.hpp"
#include "orthoinv/evaluate.hpp"

namespace orthoinv {
namespace {

// Runs fn(k) for k in [begin, end) on up to `workers` threads, striding by
// index. The first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned workers, Fn fn) {
  const std::size_t count = end > begin ? end - begin : 0;
  const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), count);
  if (threads <= 1) {
    for (std::size_t k = begin; k < end; ++k) fn(k);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t k = begin + t; k < end; k += threads) fn(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::vector<GeneratorMonomial> monomials_avoiding(const GeneratorSet& set, Grade target, std::size_t skip) {
  auto all = enumerate_monomials(set, target);
  std::erase_if(all, [&](const GeneratorMonomial& m) {
    return std::any_of(m.factors.begin(), m.factors.end(), [&](const MonomialFactor& f) { return f.index == skip; });
  });
  return all;
}

std::size_t rank_of_prefix(const std::vector<std::size_t>& pivots, std::size_t columns) {
  return static_cast<std::size_t>(std::count_if(pivots.begin(), pivots.end(), [&](std::size_t c) { return c < columns; }));
}

Grade total_grade(int d) { return {d, 0}; }

}  // namespace

PointCache::PointCache(const GeneratorSet& set, const AnalysisContext& ctx) : set_(&set), ctx_(ctx) {}

void PointCache::ensure(std::size_t count) {
  const std::size_t old = points_.size();
  if (count <= old) return;
  points_.resize(count);
  values_.resize(count);
  const EvaluationContext ectx = ctx_.evaluation_context(*set_);
  parallel_for(old, count, ctx_.workers, [&](std::size_t k) {
    points_[k] = random_traceless(ectx, static_cast<std::uint64_t>(k));
    values_[k] = evaluate_generators(ctx_.field, *set_, points_[k]);
  });
}

FieldMatrix evaluation_matrix(PointCache& cache, const MonomialEvaluator& monomials,
                              const std::vector<ExtraColumn>& extras, std::size_t rows) {
  cache.ensure(rows);
  const std::size_t mcols = monomials.size();
  FieldMatrix m(rows, mcols + extras.size());
  const PrimeField& field = cache.context().field;
  parallel_for(0, rows, cache.context().workers, [&](std::size_t r) {
    auto row = m.row(r);
    monomials.evaluate(field, cache.values(r), row.subspan(0, mcols));
    for (std::size_t e = 0; e < extras.size(); ++e) row[mcols + e] = extras[e](cache, r);
  });
  return m;
}

bool DimensionReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const DimensionRow& r) { return r.match; });
}

DimensionRow graded_dimension(PointCache& cache, Grade target, std::optional<BigInt> expected) {
  DimensionRow row;
  row.grade = target;
  MonomialEvaluator ev(enumerate_monomials(cache.set(), target));
  row.monomials = ev.size();
  if (ev.size() > 0) {
    const std::size_t rows = ev.size() + cache.context().surplus;
    row.rank = rank_mod_p(cache.context().field, evaluation_matrix(cache, ev, {}, rows));
  }
  row.expected = std::move(expected);
  row.match = !row.expected || BigInt(row.rank) == *row.expected;
  return row;
}

DimensionRow graded_dimension(const GeneratorSet& set, Grade target, const AnalysisContext& ctx,
                              std::optional<BigInt> expected) {
  PointCache cache(set, ctx);
  return graded_dimension(cache, target, std::move(expected));
}

DimensionReport graded_dimensions(const GeneratorSet& set, int max_total, const AnalysisContext& ctx,
                                  const CoefficientTable* expected) {
  DimensionReport report;
  report.set = set.name();
  report.grading = set.grading();
  PointCache cache(set, ctx);
  auto lookup = [&](int i, int j) -> std::optional<BigInt> {
    if (expected && expected->has(i, j)) return expected->at(i, j);
    return std::nullopt;
  };
  for (int d = 0; d <= max_total; ++d) {
    if (set.grading() == Grading::kTotal) {
      report.rows.push_back(graded_dimension(cache, total_grade(d), lookup(d, 0)));
    } else {
      for (int i = d; i >= 0; --i) report.rows.push_back(graded_dimension(cache, {i, d - i}, lookup(i, d - i)));
    }
  }
  return report;
}

std::string_view to_string(MembershipVerdict v) noexcept {
  return v == MembershipVerdict::kCertifiedIndependent ? "certified-independent" : "probably-member";
}

MembershipTarget membership_target(const GeneratorSet& set, const InvariantExpression& e, std::string label) {
  const auto grade = set.grade_of(e);
  if (!grade) throw Error("target " + label + " is not homogeneous in the grading of " + set.name());
  return {std::move(label), *grade, [e](const PointCache& cache, std::size_t k) {
            return evaluate_invariant(cache.context().field, e, cache.point(k));
          }};
}

MembershipTarget membership_target(const GeneratorSet& set, const GeneratorPolynomial& p, std::string label) {
  const auto grade = p.grade(set);
  if (!grade) throw Error("target " + label + " is not homogeneous in the grading of " + set.name());
  return {std::move(label), *grade, [p](const PointCache& cache, std::size_t k) {
            return p.evaluate(cache.context().field, cache.set(), cache.values(k));
          }};
}

namespace {

MembershipCertificate certify(PointCache& cache, std::vector<GeneratorMonomial> monomials, const MembershipTarget& t) {
  MembershipCertificate cert;
  cert.target = t.label;
  cert.grade = t.grade;
  cert.seed = cache.context().seed;
  MonomialEvaluator ev(std::move(monomials));
  cert.monomials = ev.size();
  cert.points = ev.size() + 1 + cache.context().surplus;
  const auto pivots = pivot_columns(cache.context().field, evaluation_matrix(cache, ev, {t.value}, cert.points));
  cert.rank_without = rank_of_prefix(pivots, ev.size());
  cert.rank_with = pivots.size();
  cert.verdict = cert.rank_with > cert.rank_without ? MembershipVerdict::kCertifiedIndependent
                                                    : MembershipVerdict::kProbablyMember;
  return cert;
}

}  // namespace

MembershipCertificate is_member(const MembershipTarget& target, const GeneratorSet& set, const AnalysisContext& ctx) {
  PointCache cache(set, ctx);
  return certify(cache, enumerate_monomials(set, target.grade), target);
}

std::vector<MembershipCertificate> is_member_each(const std::vector<MembershipTarget>& targets,
                                                  const GeneratorSet& set, const AnalysisContext& ctx) {
  PointCache cache(set, ctx);
  std::vector<MembershipCertificate> out(targets.size());
  std::map<Grade, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < targets.size(); ++i) groups[targets[i].grade].push_back(i);
  for (const auto& [grade, members] : groups) {
    MonomialEvaluator ev(enumerate_monomials(set, grade));
    std::vector<ExtraColumn> cols;
    for (std::size_t i : members) cols.push_back(targets[i].value);
    const std::size_t points = ev.size() + 1 + ctx.surplus;
    const auto pivots = pivot_columns(ctx.field, evaluation_matrix(cache, ev, cols, points));
    const std::size_t without = rank_of_prefix(pivots, ev.size());
    bool clean = true;
    for (std::size_t j = 0; j < members.size(); ++j) {
      const std::size_t i = members[j];
      clean = clean && rank_of_prefix(pivots, ev.size() + j + 1) == without;
      if (!clean) {
        out[i] = certify(cache, ev.monomials(), targets[i]);
        continue;
      }
      MembershipCertificate& cert = out[i];
      cert.target = targets[i].label;
      cert.grade = grade;
      cert.seed = ctx.seed;
      cert.monomials = ev.size();
      cert.points = points;
      cert.rank_without = without;
      cert.rank_with = without;
      cert.verdict = MembershipVerdict::kProbablyMember;
    }
  }
  return out;
}

MembershipCertificate generator_membership(PointCache& cache, std::size_t index) {
  const GeneratorSet& set = cache.set();
  const Generator& g = set[index];
  MembershipTarget t{g.label, g.grade, [index](const PointCache& c, std::size_t k) { return c.values(k)[index]; }};
  return certify(cache, monomials_avoiding(set, g.grade, index), t);
}

std::vector<MembershipCertificate> minimality_report(const GeneratorSet& set, const AnalysisContext& ctx) {
  PointCache cache(set, ctx);
  std::vector<MembershipCertificate> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) out.push_back(generator_membership(cache, i));
  return out;
}

bool JacobianReport::consistent() const {
  return std::all_of(ranks.begin(), ranks.end(), [&](std::size_t r) { return r == rank; });
}

namespace {

// Tangent directions spanning the traceless n x n matrices: E_ij (i != j)
// and E_ii - E_nn for i < n-1.
std::vector<FieldMatrix> traceless_directions(const PrimeField& f, std::size_t n) {
  std::vector<FieldMatrix> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      FieldMatrix e(n, n);
      e(i, j) = f.one();
      dirs.push_back(std::move(e));
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    FieldMatrix e(n, n);
    e(i, i) = f.one();
    e(n - 1, n - 1) = f.neg(f.one());
    dirs.push_back(std::move(e));
  }
  return dirs;
}

RingMatrix<DualField> lift(const FieldMatrix& base, const FieldMatrix* dir) {
  RingMatrix<DualField> m(base.rows(), base.cols());
  for (std::size_t i = 0; i < base.rows(); ++i)
    for (std::size_t j = 0; j < base.cols(); ++j) m(i, j) = {base(i, j), dir ? (*dir)(i, j) : FieldElement{}};
  return m;
}

}  // namespace

JacobianReport jacobian_rank(const GeneratorSet& set, const AnalysisContext& ctx, int seeds) {
  const PrimeField& f = ctx.field;
  const DualField dual(f);
  const std::size_t n = set.order();
  const bool bound = set.mode() == EvaluationMode::kTransposeBound;
  const auto dirs = traceless_directions(f, n);

  JacobianReport report;
  report.generators = set.size();
  report.coordinates = bound ? dirs.size() : 2 * dirs.size();
  for (int s = 0; s < seeds; ++s) {
    const auto ectx = ctx.evaluation_context(set).with_seed(ctx.seed + static_cast<std::uint64_t>(s));
    const SamplePoint pt = random_traceless(ectx, std::uint64_t{0});
    FieldMatrix jac(set.size(), report.coordinates);
    parallel_for(0, report.coordinates, ctx.workers, [&](std::size_t c) {
      RingMatrix<DualField> x, y;
      if (bound) {
        x = lift(pt.x, &dirs[c]);
        y = transpose(x);
      } else if (c < dirs.size()) {
        x = lift(pt.x, &dirs[c]);
        y = lift(pt.y, nullptr);
      } else {
        x = lift(pt.x, nullptr);
        y = lift(pt.y, &dirs[c - dirs.size()]);
      }
      for (std::size_t g = 0; g < set.size(); ++g) jac(g, c) = evaluate_invariant(dual, set[g].expression, x, y).tangent;
    });
    report.ranks.push_back(rank_mod_p(f, std::move(jac)));
  }
  report.rank = report.ranks.empty() ? 0 : *std::max_element(report.ranks.begin(), report.ranks.end());
  return report;
}

IdentityReport verify_polynomial_identity(const GeneratorPolynomial& relation, const GeneratorSet& set,
                                          std::size_t trials, const AnalysisContext& ctx) {
  if (trials == 0) throw Error("identity check needs at least one trial");
  IdentityReport report;
  report.trials = trials;
  report.degree = relation.max_total_degree(set);
  const double p = static_cast<double>(ctx.field.modulus());
  report.log10_trial_bound = std::log10(std::max(report.degree, 1) / p);
  report.log10_false_pass = static_cast<double>(trials) * report.log10_trial_bound;
  PointCache cache(set, ctx);
  cache.ensure(trials);
  for (std::size_t k = 0; k < trials; ++k) {
    if (!ctx.field.is_zero(relation.evaluate(ctx.field, set, cache.values(k)))) {
      ++report.nonzero;
      if (!report.first_failure) report.first_failure = k;
    }
  }
  return report;
}

namespace {

// Module span of `basis` over the polynomial ring in `hsop`, as columns of
// evaluation matrices on a shared point cache.
class ModuleSpan {
 public:
  ModuleSpan(PointCache& cache, const std::vector<std::string>& hsop) : cache_(&cache) {
    const GeneratorSet& set = cache.set();
    if (set.grading() != Grading::kTotal) throw Error("module checks need a total grading");
    for (const auto& l : hsop) {
      hsop_index_.push_back(set.index_of(l));
      hsop_grades_.push_back(set[hsop_index_.back()].grade);
    }
  }

  int degree_of(const GeneratorPolynomial& b) const {
    const auto g = b.grade(cache_->set());
    if (!g) throw Error("basis element " + b.to_string() + " is not homogeneous");
    return g->x;
  }

  // Columns (hsop monomial of degree d - deg b) * b for every b.
  std::vector<ExtraColumn> products(const std::vector<GeneratorPolynomial>& basis, int d) const {
    std::vector<ExtraColumn> cols;
    for (const auto& b : basis) {
      const int db = degree_of(b);
      if (db > d) continue;
      for (auto& m : enumerate_monomials(hsop_grades_, total_grade(d - db))) {
        cols.push_back([this, b, m](const PointCache& c, std::size_t k) {
          const PrimeField& f = c.context().field;
          const auto values = c.values(k);
          FieldElement v = b.evaluate(f, c.set(), values);
          for (const auto& fac : m.factors) v = f.mul(v, f.pow(values[hsop_index_[fac.index]], fac.exponent));
          return v;
        });
      }
    }
    return cols;
  }

 private:
  PointCache* cache_;
  std::vector<std::size_t> hsop_index_;
  std::vector<Grade> hsop_grades_;
};

}  // namespace

bool HironakaReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const HironakaRow& r) { return r.ok(); });
}

std::optional<int> HironakaReport::first_failure() const {
  for (const auto& r : rows)
    if (!r.ok()) return r.degree;
  return std::nullopt;
}

HironakaReport hironaka_check(const GeneratorSet& set, const std::vector<std::string>& hsop,
                              const std::vector<GeneratorPolynomial>& basis, int max_degree,
                              const CoefficientTable& series, const AnalysisContext& ctx) {
  PointCache cache(set, ctx);
  ModuleSpan span(cache, hsop);
  HironakaReport report;
  for (const auto& b : basis) report.basis_degrees.push_back(span.degree_of(b));
  const MonomialEvaluator none(std::vector<GeneratorMonomial>{});
  for (int d = 0; d <= max_degree; ++d) {
    HironakaRow row;
    row.degree = d;
    const auto cols = span.products(basis, d);
    MonomialEvaluator full(enumerate_monomials(set, total_grade(d)));
    const std::size_t points = std::max(cols.size(), full.size()) + ctx.surplus;
    row.products = cols.size();
    row.rank = cols.empty() ? 0 : rank_mod_p(ctx.field, evaluation_matrix(cache, none, cols, points));
    row.algebra_dimension = full.size() == 0 ? 0 : rank_mod_p(ctx.field, evaluation_matrix(cache, full, {}, points));
    row.coefficient = series.at(d);
    row.count_ok = BigInt(row.products) == row.coefficient;
    row.free_ok = row.rank == row.products;
    row.spanning_ok = row.rank == row.algebra_dimension;
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool RepairReport::success() const {
  return std::all_of(targets.begin(), targets.end(), [](const RepairTarget& t) { return t.accepted.has_value(); });
}

RepairReport repair_module_basis(const GeneratorSet& set, const std::vector<std::string>& hsop,
                                 const std::vector<GeneratorPolynomial>& fixed, std::vector<int> target_degrees,
                                 const std::vector<std::string>& pool, const AnalysisContext& ctx,
                                 const RepairOptions& options) {
  PointCache cache(set, ctx);
  ModuleSpan span(cache, hsop);
  std::vector<Grade> pool_grades;
  for (const auto& l : pool) pool_grades.push_back(set[set.index_of(l)].grade);
  const MonomialEvaluator none(std::vector<GeneratorMonomial>{});

  auto rank_of = [&](const std::vector<ExtraColumn>& cols) -> std::size_t {
    if (cols.empty()) return 0;
    return rank_mod_p(ctx.field, evaluation_matrix(cache, none, cols, cols.size() + ctx.surplus));
  };
  auto free_through = [&](const std::vector<GeneratorPolynomial>& basis, int from, int to) {
    for (int e = from; e <= to; ++e) {
      const auto cols = span.products(basis, e);
      if (rank_of(cols) != cols.size()) return false;
    }
    return true;
  };

  RepairReport report;
  report.completion = fixed;
  std::sort(target_degrees.begin(), target_degrees.end());
  for (const int d : target_degrees) {
    RepairTarget target;
    target.degree = d;
    auto present = [&](const GeneratorPolynomial& p) {
      return std::any_of(report.completion.begin(), report.completion.end(),
                         [&](const GeneratorPolynomial& q) { return q == p; });
    };
    std::vector<GeneratorPolynomial> candidates;
    for (const auto& p : options.preferred) {
      if (span.degree_of(p) == d && !present(p)) candidates.push_back(p);
    }
    for (const auto& m : enumerate_monomials(pool_grades, total_grade(d))) {
      GeneratorPolynomial p = GeneratorPolynomial::constant(1);
      for (const auto& fac : m.factors) p = p * GeneratorPolynomial::variable(pool[fac.index]).pow(fac.exponent);
      const bool seen = std::any_of(candidates.begin(), candidates.end(),
                                    [&](const GeneratorPolynomial& q) { return q == p; });
      if (!present(p) && !seen) candidates.push_back(std::move(p));
    }

    const auto base = span.products(report.completion, d);
    target.rank_before = rank_of(base);
    for (const auto& c : candidates) {
      target.candidates.push_back(c.to_string());
      auto cols = base;
      cols.push_back([c](const PointCache& pc, std::size_t k) {
        return c.evaluate(pc.context().field, pc.set(), pc.values(k));
      });
      if (rank_of(cols) <= target.rank_before) continue;
      target.passing.push_back(c.to_string());
      if (target.accepted) continue;
      auto enlarged = report.completion;
      enlarged.push_back(c);
      if (options.lookahead > d && !free_through(enlarged, d + 1, options.lookahead)) {
        target.rejected.push_back(c.to_string());
        continue;
      }
      target.accepted = c.to_string();
      report.completion = std::move(enlarged);
    }
    report.targets.push_back(std::move(target));
  }
  return report;
}

BasisSplit split_basis_by_degrees(const GeneratorSet& set, const std::vector<GeneratorPolynomial>& basis,
                                  std::vector<int> numerator_degrees) {
  BasisSplit split;
  for (const auto& b : basis) {
    const auto g = b.grade(set);
    if (!g) throw Error("basis element " + b.to_string() + " is not homogeneous");
    const auto it = std::find(numerator_degrees.begin(), numerator_degrees.end(), g->x);
    if (it != numerator_degrees.end()) {
      numerator_degrees.erase(it);
      split.kept.push_back(b);
    } else {
      split.excess.push_back(b);
    }
  }
  std::sort(numerator_degrees.begin(), numerator_degrees.end());
  split.missing_degrees = std::move(numerator_degrees);
  return split;
}

}  // namespace orthoinv
