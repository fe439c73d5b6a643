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

#include "lplab/io.hpp"

#include <fstream>
#include <utility>

#include "lplab/errors.hpp"

namespace lplab {

using nlohmann::json;

namespace {

json rationals_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const Rational& v : values) arr.push_back(format_rational(v));
  return arr;
}

std::vector<Rational> rationals_from_json(const json& arr, const std::string& what) {
  if (!arr.is_array()) throw ParseError(what + " must be an array of rational strings");
  std::vector<Rational> values;
  values.reserve(arr.size());
  for (const json& item : arr) {
    if (!item.is_string()) throw ParseError(what + " entries must be strings");
    values.push_back(parse_rational(item.get<std::string>()));
  }
  return values;
}

}  // namespace

std::string rule_name(PivotRule rule) {
  switch (rule) {
    case PivotRule::MostNegative: return "most_negative";
    case PivotRule::BestImprovement: return "best_improvement";
    case PivotRule::Bland: return "bland";
  }
  return "?";
}

PivotRule parse_rule(const std::string& text) {
  if (text == "dantzig" || text == "most-negative" || text == "most_negative")
    return PivotRule::MostNegative;
  if (text == "best" || text == "best-improvement" || text == "best_improvement")
    return PivotRule::BestImprovement;
  if (text == "bland") return PivotRule::Bland;
  throw ParseError("unknown pivot rule: '" + text + "'");
}

std::string status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::CycleDetected: return "cycle_detected";
    case SolveStatus::IterationLimit: return "iteration_limit";
  }
  return "?";
}

json lp_file_to_json(const LpFile& file) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["name"] = file.lp.name;
  json rows = json::array();
  for (std::size_t i = 0; i < file.lp.num_rows(); ++i)
    rows.push_back(rationals_to_json(file.lp.a.row(i)));
  doc["A"] = std::move(rows);
  doc["b"] = rationals_to_json(file.lp.b);
  doc["c"] = rationals_to_json(file.lp.c);
  if (file.initial_basis) doc["initial_basis"] = *file.initial_basis;
  if (!file.metadata.kind.empty()) {
    json meta;
    meta["kind"] = file.metadata.kind;
    if (file.metadata.theta) meta["theta"] = format_rational(*file.metadata.theta);
    if (file.metadata.b_l1) meta["b_l1"] = format_rational(*file.metadata.b_l1);
    doc["metadata"] = std::move(meta);
  }
  return doc;
}

LpFile lp_file_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("instance file must be a JSON object");
  if (doc.value("schema_version", 0) != kSchemaVersion)
    throw ParseError("unsupported schema_version");
  if (!doc.contains("A") || !doc["A"].is_array() || doc["A"].empty())
    throw ParseError("missing constraint matrix A");

  std::vector<std::vector<Rational>> rows;
  for (const json& row : doc["A"]) rows.push_back(rationals_from_json(row, "A row"));
  const std::size_t m = rows.size(), n = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != n) throw ParseError("ragged rows in A");

  Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];

  if (!doc.contains("b") || !doc.contains("c")) throw ParseError("missing b or c");
  std::vector<Rational> b = rationals_from_json(doc["b"], "b");
  std::vector<Rational> c = rationals_from_json(doc["c"], "c");

  LpFile file{LinearProgram(std::move(a), std::move(b), std::move(c),
                            doc.value("name", std::string())),
              std::nullopt,
              {}};
  if (doc.contains("initial_basis")) {
    if (!doc["initial_basis"].is_array()) throw ParseError("initial_basis must be an array");
    file.initial_basis = doc["initial_basis"].get<std::vector<int>>();
  }
  if (doc.contains("metadata")) {
    const json& meta = doc["metadata"];
    file.metadata.kind = meta.value("kind", std::string());
    if (meta.contains("theta")) file.metadata.theta = parse_rational(meta["theta"].get<std::string>());
    if (meta.contains("b_l1")) file.metadata.b_l1 = parse_rational(meta["b_l1"].get<std::string>());
  }
  return file;
}

LpFile load_lp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  LpFile file = lp_file_from_json(doc);
  file.lp = validate(std::move(file.lp));
  return file;
}

void save_lp_file(const std::string& path, const LpFile& file) {
  write_json_file(path, lp_file_to_json(file));
}

json trace_to_json(const std::string& instance, PivotRule rule, const SolveResult& result) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["instance"] = instance;
  doc["rule"] = rule_name(rule);
  doc["status"] = status_name(result.status);
  doc["iterations"] = result.iterations();
  doc["distinct_bfs_count"] = result.distinct_bfs_count;
  if (result.z) doc["z"] = format_rational(*result.z);
  if (result.optimal_basis) doc["optimal_basis"] = result.optimal_basis->indices();
  if (result.optimal_x) doc["optimal_x"] = rationals_to_json(*result.optimal_x);

  json steps = json::array();
  for (const IterateRecord& rec : result.trace) {
    json item;
    item["t"] = rec.t;
    item["basis"] = rec.basis.indices();
    item["x"] = rationals_to_json(rec.x);
    item["objective"] = format_rational(rec.objective);
    json rc = json::array();
    for (const auto& [j, cost] : rec.reduced_costs) rc.push_back({j, format_rational(cost)});
    item["reduced_costs"] = std::move(rc);
    item["delta"] = rec.delta ? json(format_rational(*rec.delta)) : json(nullptr);
    item["entering"] = rec.entering ? json(*rec.entering) : json(nullptr);
    item["leaving"] = rec.leaving ? json(*rec.leaving) : json(nullptr);
    item["step"] = rec.step ? json(format_rational(*rec.step)) : json(nullptr);
    item["degenerate_pivot"] = rec.degenerate_pivot;
    item["new_bfs"] = rec.new_bfs;
    item["arrived_by"] = rec.arrived_by ? json(rule_name(*rec.arrived_by)) : json(nullptr);
    steps.push_back(std::move(item));
  }
  doc["trace"] = std::move(steps);
  return doc;
}

json census_to_json(const std::string& instance, const VertexCensus& census) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["instance"] = instance;
  json bases = json::array();
  for (const BasicSolution& sol : census.feasible_bases) {
    json item;
    item["basis"] = sol.basis.indices();
    item["x"] = rationals_to_json(sol.x);
    item["objective"] = format_rational(sol.objective);
    item["degenerate"] = sol.degenerate;
    bases.push_back(std::move(item));
  }
  doc["feasible_bases"] = std::move(bases);
  json vertices = json::array();
  for (const VertexRecord& v : census.distinct_vertices) {
    json item;
    item["x"] = rationals_to_json(v.x);
    item["objective"] = format_rational(v.objective);
    vertices.push_back(std::move(item));
  }
  doc["distinct_vertices"] = std::move(vertices);
  doc["delta"] = format_rational(census.delta);
  doc["gamma"] = format_rational(census.gamma);
  doc["z_star"] = format_rational(census.z_star);
  doc["second_value"] = census.second_value ? json(format_rational(*census.second_value)) : json(nullptr);
  doc["all_nondegenerate"] = census.all_nondegenerate;
  return doc;
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

}  // namespace lplab
