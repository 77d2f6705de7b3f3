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

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fracdirac {

/// One named check against a tolerance: the universal result record.
/// `pass` is always derived from `max_residual <= tolerance`.
struct CaseRecord {
  std::string label;
  double residual = 0.0;
  bool pass = true;
};

struct VerificationReport {
  std::string check_name;
  std::vector<std::pair<std::string, std::string>> params;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<CaseRecord> cases;

  explicit VerificationReport(std::string name, double tol)
      : check_name(std::move(name)), tolerance(tol) {}

  void add_case(std::string label, double residual) {
    cases.push_back({std::move(label), residual, residual <= tolerance});
    if (residual > max_residual) max_residual = residual;
    pass = max_residual <= tolerance;
  }

  void add_param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
  }

  void add_param(const std::string& key, double value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    params.emplace_back(key, os.str());
  }

  void add_param(const std::string& key, long long value) {
    params.emplace_back(key, std::to_string(value));
  }

  void add_param(const std::string& key, int value) {
    params.emplace_back(key, std::to_string(value));
  }
};

}  // namespace fracdirac
