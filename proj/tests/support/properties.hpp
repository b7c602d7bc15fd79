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
#include <string>
#include <vector>

namespace orthoinv::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;
  bool ok() const { return cases > 0 && violations == 0; }
};

// Each suite draws point k from derive_seed(seed, k).
PropertyResult trace_cyclicity(std::uint64_t seed, std::size_t points = 100);
PropertyResult star_law(std::uint64_t seed, std::size_t points = 100);
// Every generator of every catalog generator set at `points` points, each
// conjugated by `rotations` Cayley rotations.
PropertyResult so_invariance(std::uint64_t seed, std::size_t rotations = 20, std::size_t points = 100);
// Conjugation by diag(-1, 1, 1, 1) on each atom of the n = 4 generators.
PropertyResult improper_sign_flips(std::uint64_t seed, std::size_t points = 100);
PropertyResult polarization_diagonal(std::uint64_t seed, std::size_t points = 100);
PropertyResult pf_of_skew(std::uint64_t seed, std::size_t points = 100);
PropertyResult pf_squared_is_det(std::uint64_t seed, std::size_t points = 100);

std::vector<PropertyResult> all_property_suites(std::uint64_t seed);

}  // namespace orthoinv::testing
