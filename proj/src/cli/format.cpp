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

#include "revspin/cli/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

namespace revspin::cli {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of the NUMBER prefix: digits ["." digits] or "." digits.
std::size_t number_prefix(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && is_digit(text[i])) ++i;
  const std::size_t int_digits = i;
  if (i < text.size() && text[i] == '.') {
    std::size_t k = i + 1;
    while (k < text.size() && is_digit(text[k])) ++k;
    if (k == i + 1 && int_digits == 0) return 0;
    return k;
  }
  return int_digits;
}

double to_double(std::string_view digits, std::string_view whole) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw UsageError("malformed number in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

double parse_number(std::string_view text) {
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);
  const std::size_t n = number_prefix(body);
  if (n == 0 || n != body.size()) {
    throw UsageError("expected a decimal number, got '" + std::string(text) + "'");
  }
  const double v = to_double(body, text);
  return negative ? -v : v;
}

double parse_angle(std::string_view text) {
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);
  const std::size_t n = number_prefix(body);
  const std::string_view number = body.substr(0, n);
  std::string_view rest = body.substr(n);
  double value = 0.0;
  if (rest.empty()) {
    if (n == 0) throw UsageError("empty angle expression '" + std::string(text) + "'");
    value = to_double(number, text);
  } else {
    if (rest.substr(0, 2) != "pi") {
      throw UsageError("malformed angle expression '" + std::string(text) + "'");
    }
    rest.remove_prefix(2);
    const double coefficient = n == 0 ? 1.0 : to_double(number, text);
    value = coefficient * std::numbers::pi;
    if (!rest.empty()) {
      if (rest.front() != '/' || rest.size() < 2) {
        throw UsageError("malformed angle expression '" + std::string(text) + "'");
      }
      rest.remove_prefix(1);
      for (char c : rest) {
        if (!is_digit(c)) throw UsageError("malformed divisor in '" + std::string(text) + "'");
      }
      const double divisor = to_double(rest, text);
      if (divisor == 0.0) throw UsageError("division by zero in '" + std::string(text) + "'");
      value /= divisor;
    }
  }
  return negative ? -value : value;
}

std::string format_angle(double radians) {
  char buf[512];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), radians, std::chars_format::fixed);
  if (ec != std::errc()) {
    throw std::runtime_error("format_angle: value out of range");
  }
  return std::string(buf, ptr);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const double a = std::abs(x);
  if (a < 1e-4 || a >= 1e6) {
    std::snprintf(buf, sizeof(buf), "%.11e", x);
    // Drop trailing zeros of the mantissa.
    std::string s(buf);
    const auto e = s.find('e');
    std::string mantissa = s.substr(0, e);
    if (mantissa.find('.') != std::string::npos) {
      while (mantissa.back() == '0') mantissa.pop_back();
      if (mantissa.back() == '.') mantissa.pop_back();
    }
    return mantissa + s.substr(e);
  }
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw std::logic_error("CsvTable: row width does not match the header");
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

void CsvTable::write(const std::filesystem::path& path) const { write_text(path, str()); }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  f << text;
  f.close();
  if (!f) {
    throw std::runtime_error("failed writing '" + path.string() + "'");
  }
}

}  // namespace revspin::cli
