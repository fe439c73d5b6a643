// Copyright 2026 lplab contributors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LPLAB_IO_HPP
#define LPLAB_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lplab/bounds.hpp"
#include "lplab/enumeration.hpp"
#include "lplab/lp.hpp"
#include "lplab/simplex.hpp"

namespace lplab {

inline constexpr int kSchemaVersion = 1;

/**
 * Instance provenance carried by generated files; "tu" instances carry
 * ||b||_1 and "mdp" instances carry theta so verify can evaluate the
 * matching corollary.
 */
struct InstanceMetadata {
  std::string kind;  // "", "random", "tu", "mdp", "km"
  std::optional<Rational> theta;
  std::optional<Rational> b_l1;
};

/**
 * On-disk instance. All indices are 0-based and every rational is a string
 * ("p/q", "p", or exact decimal); no binary floating point appears in any
 * file.
 */
struct LpFile {
  LinearProgram lp;
  std::optional<std::vector<int>> initial_basis;
  InstanceMetadata metadata;
};

std::string rule_name(PivotRule rule);
PivotRule parse_rule(const std::string& text);  // accepts dantzig/most-negative, best[-improvement], bland
std::string status_name(SolveStatus status);

nlohmann::json lp_file_to_json(const LpFile& file);
LpFile lp_file_from_json(const nlohmann::json& doc);

/** Throws ParseError on malformed JSON or schema violations; validates rank. */
LpFile load_lp_file(const std::string& path);
void save_lp_file(const std::string& path, const LpFile& file);

nlohmann::json trace_to_json(const std::string& instance, PivotRule rule,
                             const SolveResult& result);
nlohmann::json census_to_json(const std::string& instance, const VertexCensus& census);

/** Writes with sorted keys and a trailing newline; byte-stable across runs. */
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace lplab

#endif  // LPLAB_IO_HPP
