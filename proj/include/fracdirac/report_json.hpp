// Copyright 2026 The fracdirac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ctime>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracdirac/types.hpp"
#include "fracdirac/verification.hpp"
#include "fracdirac/version.hpp"

namespace fracdirac {

using Json = nlohmann::ordered_json;

inline Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const VerificationReport& report) {
  Json params = Json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  Json cases = Json::array();
  for (const auto& c : report.cases)
    cases.push_back(Json{{"label", c.label}, {"residual", c.residual}, {"pass", c.pass}});
  return Json{{"check_name", report.check_name},
              {"params", std::move(params)},
              {"max_residual", report.max_residual},
              {"tolerance", report.tolerance},
              {"pass", report.pass},
              {"cases", std::move(cases)}};
}

inline std::string utc_timestamp_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

/// Versioned top-level document every CLI command emits. `overall_pass` is
/// the conjunction of the member reports; `data` carries command-specific
/// structured extras (candidate matrices, free indices, ...).
inline Json make_report_document(const std::string& command,
                                 const std::vector<VerificationReport>& reports,
                                 Json data = Json::object()) {
  bool overall = true;
  Json report_array = Json::array();
  for (const auto& r : reports) {
    overall = overall && r.pass;
    report_array.push_back(to_json(r));
  }
  return Json{{"schema", 1},
              {"tool_version", kVersion},
              {"command", command},
              {"timestamp", utc_timestamp_now()},
              {"reports", std::move(report_array)},
              {"data", std::move(data)},
              {"overall_pass", overall}};
}

}  // namespace fracdirac
