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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace orthoinv::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::uint64_t prime = (std::uint64_t{1} << 61) - 1;
  std::uint64_t seed = 42;
  std::optional<int> max_degree;
  std::optional<int> max_total_degree;
  std::size_t trials = 100;
  unsigned workers = 1;
  std::string format = "json";
  std::string out;
  std::string case_name;
  bool compare = false;
  bool timings = false;

  /// Everything that influences results; `workers`, `format`, `out` and
  /// `timings` are left out so reports are comparable across them.
  Json to_json() const;
};

struct CheckRecord {
  std::string name;
  Json expected;
  Json observed;
  bool pass = false;
  std::optional<double> seconds;
};

struct Report {
  std::string command;
  Json config;
  std::vector<CheckRecord> checks;

  bool pass() const;
  Json to_json() const;
  std::string to_text() const;
};

/// Subcommand names in presentation order.
const std::vector<std::string>& commands();

/// Runs one subcommand. Throws Error (or a subclass) on bad input.
Report run_command(const std::string& command, const RunConfig& config);

/// Full command line: parses, runs and writes the report. Returns 0 when
/// every check passes, 1 on a failed check or runtime error, 2 on usage
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthoinv::cli
