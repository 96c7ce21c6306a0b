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
#include <optional>
#include <string>
#include <vector>

#include "revspin/cli/format.hpp"
#include "revspin/cli/scenario.hpp"

namespace revspin::cli {

struct MetricRow {
  std::string name;
  double value;
  // Decimals for the rounded column; empty column when absent.
  std::optional<int> decimals;
};

/// Throws ConditionError when the reversal is not admissible.
std::vector<MetricRow> scenario_metrics(const Scenario& scenario);
std::vector<MetricRow> preset_metrics(const std::string& preset);
/// Header name,value,rounded.
CsvTable metrics_table(const std::vector<MetricRow>& rows);

/// Ids with a data target: 1, 3..11.
const std::vector<int>& figure_ids();
/// Default parameters for a figure; UsageError for unknown ids.
Scenario figure_defaults(int id);
CsvTable figure_table(int id, const Scenario& scenario);
std::string figure_meta(int id, const Scenario& scenario, const CsvTable& table);
/// Writes figN.csv and figN.meta.txt into dir (created if missing).
void write_figure(int id, const Scenario& scenario, const std::filesystem::path& dir);

/// Cap from REVSPIN_THREADS, else the hardware concurrency (at least 1).
/// Throws UsageError when the variable is set but not a positive integer.
unsigned sweep_threads();

/// vary in {j, g, theta, phi}; range "A:B:STEP" with STEP > 0. Rows come out
/// in grid order whatever the thread count.
CsvTable run_sweep(const Scenario& base, const std::string& vary, const std::string& range,
                   unsigned threads);

struct OracleCheck {
  CsvTable table;
  bool pass;
};

/// Closed-form amplitudes against the tensor-product oracle on a 3x3x3
/// (theta, phi, g) grid for every 2j <= max_twice_j, 2s <= max_twice_s.
OracleCheck oracle_check(int max_twice_j, int max_twice_s, double tol);

}  // namespace revspin::cli
