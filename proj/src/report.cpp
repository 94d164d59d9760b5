// Copyright 2026 The Authors.
//
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

#include "spantree/report.hpp"

#include <sstream>

#include "spantree/error.hpp"
#include "spantree/instance_io.hpp"

namespace spantree {

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kExact:
      return "exact";
    case Algorithm::kGreedyTh:
      return "greedy-th";
    case Algorithm::kNstm:
      return "nstm";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "exact") return Algorithm::kExact;
  if (name == "greedy-th") return Algorithm::kGreedyTh;
  if (name == "nstm") return Algorithm::kNstm;
  return std::nullopt;
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["schema_version"] = r.schema_version;
  j["instance"] = {{"name", r.instance}, {"n", r.n}, {"m", r.m}, {"q", r.q}, {"k", r.k}};
  j["algorithm"] = {{"name", r.algorithm}, {"eps", r.eps}};
  j["seed"] = r.seed;
  j["selection"] = {{"chosen", r.selection.chosen},
                    {"per_step_log_gain", r.selection.per_step_log_gain},
                    {"budget_used", r.selection.budget_used},
                    {"exact_ledger", r.selection.exact_ledger},
                    {"diagnostic", r.selection.diagnostic}};
  j["log_gain"] = r.selection.total_log_gain;
  j["base_log2_trees"] = r.base_log2_trees;
  j["wall_time_seconds"] = r.wall_time_seconds;
  if (r.oracle) {
    j["oracle"] = {{"ran", r.oracle->ran},
                   {"note", r.oracle->note},
                   {"optimum", r.oracle->optimum},
                   {"optimum_log_gain", r.oracle->optimum_log_gain},
                   {"ratio", r.oracle->ratio}};
  } else {
    j["oracle"] = nullptr;
  }
  j["warnings"] = r.warnings;
  return j;
}

RunReport report_from_json(const nlohmann::json& j) {
  try {
    RunReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion) {
      throw Error("unsupported report schema version " + std::to_string(r.schema_version));
    }
    const auto& inst = j.at("instance");
    r.instance = inst.at("name").get<std::string>();
    r.n = inst.at("n").get<int>();
    r.m = inst.at("m").get<std::size_t>();
    r.q = inst.at("q").get<std::size_t>();
    r.k = inst.at("k").get<int>();
    r.algorithm = j.at("algorithm").at("name").get<std::string>();
    r.eps = j.at("algorithm").at("eps").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    const auto& sel = j.at("selection");
    r.selection.chosen = sel.at("chosen").get<std::vector<int>>();
    r.selection.per_step_log_gain = sel.at("per_step_log_gain").get<std::vector<double>>();
    r.selection.budget_used = sel.at("budget_used").get<int>();
    r.selection.exact_ledger = sel.at("exact_ledger").get<bool>();
    r.selection.diagnostic = sel.at("diagnostic").get<std::string>();
    r.selection.total_log_gain = j.at("log_gain").get<double>();
    r.base_log2_trees = j.at("base_log2_trees").get<double>();
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    if (!j.at("oracle").is_null()) {
      const auto& o = j.at("oracle");
      OracleComparison cmp;
      cmp.ran = o.at("ran").get<bool>();
      cmp.note = o.at("note").get<std::string>();
      cmp.optimum = o.at("optimum").get<std::vector<int>>();
      cmp.optimum_log_gain = o.at("optimum_log_gain").get<double>();
      cmp.ratio = o.at("ratio").get<double>();
      r.oracle = std::move(cmp);
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

std::string report_csv_header() {
  return "instance,n,m,q,k,algorithm,eps,seed,budget_used,log_gain,wall_time_seconds,"
         "oracle_log_gain,oracle_ratio";
}

std::string report_csv_row(const RunReport& r) {
  std::ostringstream out;
  out << r.instance << ',' << r.n << ',' << r.m << ',' << r.q << ',' << r.k << ','
      << r.algorithm << ',' << format_real(r.eps) << ',' << r.seed << ','
      << r.selection.budget_used << ',' << format_real(r.selection.total_log_gain) << ','
      << format_real(r.wall_time_seconds) << ',';
  if (r.oracle && r.oracle->ran) {
    out << format_real(r.oracle->optimum_log_gain) << ',' << format_real(r.oracle->ratio);
  } else {
    out << ',';
  }
  return out.str();
}

}  // namespace spantree
