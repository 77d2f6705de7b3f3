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

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracdirac/grid.hpp"
#include "fracdirac/types.hpp"

namespace fracdirac {

/// Parse failure with 1-based line and column (field) position baked into the
/// message, so callers can surface exact diagnostics.
class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, std::size_t column, const std::string& what_part)
      : std::runtime_error("csv: line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what_part),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

inline double parse_double(const std::string& field, std::size_t line,
                           std::size_t column) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end)
    throw CsvError(line, column, "'" + field + "' is not a number");
  return value;
}

}  // namespace detail

/// Header `index,re,im`, one sample per row. The domain length is not stored
/// in the file and must be supplied by the caller.
inline GridFunction read_grid_csv(std::istream& in, double length) {
  std::string line;
  if (!std::getline(in, line)) throw CsvError(1, 1, "empty input");
  {
    const auto header = detail::split_fields(line);
    if (header.size() != 3 || header[0] != "index" || header[1] != "re" ||
        header[2] != "im")
      throw CsvError(1, 1, "expected header 'index,re,im'");
  }

  std::vector<Complex> samples;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = detail::split_fields(line);
    if (fields.size() != 3)
      throw CsvError(line_no, fields.size(),
                     "expected 3 fields, got " + std::to_string(fields.size()));
    const double idx = detail::parse_double(fields[0], line_no, 1);
    if (idx != static_cast<double>(samples.size()))
      throw CsvError(line_no, 1,
                     "expected index " + std::to_string(samples.size()));
    const double re = detail::parse_double(fields[1], line_no, 2);
    const double im = detail::parse_double(fields[2], line_no, 3);
    samples.emplace_back(re, im);
  }

  ComplexVector v(static_cast<Eigen::Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = samples[i];
  try {
    return make_grid_function(std::move(v), length);
  } catch (const std::invalid_argument& e) {
    throw CsvError(line_no, 1, e.what());
  }
}

inline GridFunction read_grid_csv_file(const std::string& path, double length) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_grid_csv(in, length);
}

inline void write_grid_csv(std::ostream& out, const GridFunction& f) {
  out << "index,re,im\n";
  out << std::setprecision(17);
  for (std::size_t j = 0; j < f.n(); ++j) {
    const Complex v = f.samples(static_cast<Eigen::Index>(j));
    out << j << ',' << v.real() << ',' << v.imag() << '\n';
  }
}

inline void write_grid_csv_file(const std::string& path, const GridFunction& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_grid_csv(out, f);
}

}  // namespace fracdirac
