// Copyright 2026 The revspin Authors
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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revspin::cli {

/// Malformed command-line input (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// ANGLE := ["-"] ( NUMBER | [NUMBER] "pi" ["/" POSINT] ), NUMBER a plain
/// decimal literal. "5pi/6" evaluates as (5 * pi) / 6.
double parse_angle(std::string_view text);

/// Shortest plain-decimal text that parse_angle maps back to the same double.
std::string format_angle(double radians);

/// Plain decimal number (no exponent), as accepted inside ANGLE.
double parse_number(std::string_view text);

/// 12 significant digits; scientific notation only for |x| < 1e-4 or
/// |x| >= 1e6 (zero prints as "0").
std::string format_number(double x);

/// Fixed-point with the given number of decimals.
std::string format_fixed(double x, int decimals);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& header() const noexcept { return header_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  const std::vector<std::string>& row(std::size_t i) const { return rows_.at(i); }

  /// Comma-separated, LF line endings, header first.
  std::string str() const;
  /// Throws std::runtime_error when the file cannot be written.
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes text verbatim; throws std::runtime_error on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace revspin::cli
