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

#include "revspin/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <thread>

#include "revspin/bayes.hpp"
#include "revspin/errors.hpp"
#include "revspin/oracle.hpp"
#include "revspin/prep.hpp"
#include "revspin/reverse.hpp"
#include "revspin/special.hpp"

namespace revspin::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr HalfInt kHalf = HalfInt::from_twice(1);

void require_reversible(const MeasurementParams& params, HalfInt s) {
  const ConditionReport report = reversibility_condition(params, s);
  if (!report.satisfied) {
    throw ConditionError("reversal requested but the measurement is not reversible: " +
                         report.diagnostic);
  }
}

std::optional<double> width_of(const MeasurementParams& params, HalfInt s) {
  try {
    return s == kHalf ? recovery_width(params) : weak_width(params, s);
  } catch (const NumericalError&) {
    return std::nullopt;
  }
}

std::vector<MetricRow> prep_metrics(const Scenario& sc) {
  const PrepResult r = subspace_prepare(sc.s, sc.j, sc.g, sc.varphi, sc.m);
  return {{"prep_probability", r.probability, 3},
          {"peak_sigma", r.peak.value(), 0},
          {"peak_estimate", r.peak_estimate, 2},
          {"leaked_mass", r.leaked_mass, std::nullopt}};
}

std::string half(HalfInt h) { return h.to_string(); }

std::string num(double x) { return format_number(x); }

CsvTable first_table(const Scenario& sc) {
  const OutcomeTable t = measure(resolve_state(sc.state, sc.s), measurement_params(sc));
  CsvTable csv({"m", "p_m", "F_m"});
  for (const auto& o : t.outcomes) csv.add_row({half(o.m), num(o.probability), num(o.fidelity)});
  return csv;
}

CsvTable joint_table(const Scenario& sc, bool probability) {
  const MeasurementParams params = measurement_params(sc);
  require_reversible(params, sc.s);
  const JointTable t = joint_measure(resolve_state(sc.state, sc.s), params);
  CsvTable csv({"m", "m_prime", probability ? "p_mm" : "F_mm"});
  for (const auto& e : t.entries()) {
    csv.add_row({half(e.m), half(e.mp), num(probability ? e.probability : e.fidelity)});
  }
  return csv;
}

CsvTable coefficient_table(const Scenario& sc) {
  const MeasurementParams params = measurement_params(sc);
  std::vector<std::string> header{"m_prime"};
  for (HalfInt sigma : projections(sc.s)) header.push_back("abs_a_sq_sigma_" + half(sigma));
  CsvTable csv(std::move(header));
  for (HalfInt mp : projections(sc.j)) {
    std::vector<std::string> row{half(mp)};
    for (HalfInt sigma : projections(sc.s)) {
      row.push_back(num(coefficient_magnitude_sq(params, mp, sigma)));
    }
    csv.add_row(std::move(row));
  }
  return csv;
}

CsvTable information_table(const Scenario& sc) {
  const MeasurementParams params = measurement_params(sc);
  require_reversible(params, kHalf);
  HypothesisPair pair = [&] {
    try {
      return make_hypothesis_pair(sc.gamma);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const auto first = analyze_first(pair, params);
  const auto joint = analyze_joint(pair, params);
  CsvTable csv({"m", "p", "I", "F", "I_prime", "F_prime"});
  for (const auto& r : first) {
    std::string ip, fp;
    for (const auto& x : joint.expectations) {
      if (x.m == r.m) {
        ip = num(x.information);
        fp = num(x.fidelity);
      }
    }
    csv.add_row({half(r.m), num(r.probability), num(r.information), num(r.fidelity), ip, fp});
  }
  return csv;
}

CsvTable asymptotics_table(const Scenario& sc) {
  if (sc.j_max.twice() < 1) throw UsageError("--j-max must be at least 1/2");
  const SpinState psi = resolve_state(sc.state, kHalf);
  CsvTable csv({"j", "avg_sq_fidelity_first", "avg_sq_fidelity_joint", "q", "q_asymptotic"});
  for (int tj = 1; tj <= sc.j_max.twice(); ++tj) {
    const MeasurementParams params(HalfInt::from_twice(tj), sc.theta, sc.phi, sc.g);
    require_reversible(params, kHalf);
    double asym = std::nan("");
    try {
      asym = asymptotic_recovery(params);
    } catch (const NumericalError&) {
    }
    csv.add_row({half(params.j()), num(avg_sq_fidelity_first(psi, params)),
                 num(avg_sq_fidelity_joint(psi, params)), num(recovery_probability(params)),
                 num(asym)});
  }
  return csv;
}

CsvTable prep_table(const Scenario& sc) {
  const PrepResult r = subspace_prepare(sc.s, sc.j, sc.g, sc.varphi, sc.m);
  CsvTable csv({"sigma", "initial", "rho_m"});
  const auto lattice = projections(sc.s);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    csv.add_row({half(lattice[i]), num(r.initial_distribution[i]), num(r.distribution[i])});
  }
  return csv;
}

Scenario weak_defaults() {
  Scenario sc = preset_scenario("paper-4-2");
  return sc;
}

const char* figure_description(int id) {
  switch (id) {
    case 1: return "|a_{m',sigma}|^2 versus m' for each sigma";
    case 3: return "probability p_m and fidelity F_m of the first measurement versus m";
    case 4: return "joint probability p_{mm'} of the measurement and its reversal";
    case 5: return "fidelity F_{mm'} after the reversing measurement";
    case 6: return "p(m), information I(m), fidelity F(m) and their expectations I'(m), F'(m) after the reversal";
    case 7: return "average squared fidelity and recovery probability q versus j";
    case 8: return "initial distribution |c'_sigma|^2 and prepared distribution rho_m(sigma)";
    case 9: return "probability p_m and fidelity F_m of the first measurement on the S_x = s eigenstate";
    case 10: return "joint probability p_{mm'} for the S_x = s eigenstate";
    case 11: return "fidelity F_{mm'} for the S_x = s eigenstate";
    default: return "";
  }
}

}  // namespace

std::vector<MetricRow> scenario_metrics(const Scenario& sc) {
  const MeasurementParams params = measurement_params(sc);
  const SpinState psi = resolve_state(sc.state, sc.s);
  require_reversible(params, sc.s);
  const OutcomeTable first = measure(psi, params);
  const JointTable joint = joint_measure(psi, params);
  std::vector<MetricRow> rows{
      {"avg_fidelity_first", first.average_fidelity(), std::nullopt},
      {"avg_fidelity_joint", joint.average_fidelity(), std::nullopt},
      {"q_prime", joint.approx_recovery_probability(sc.threshold), std::nullopt},
  };
  const auto width = width_of(params, sc.s);
  if (sc.s == kHalf) {
    rows.push_back({"q", joint.recovery_probability(), std::nullopt});
    rows.push_back({"delta_m", width.value_or(std::nan("")), std::nullopt});
  } else {
    rows.push_back({"delta_m_tilde", width.value_or(std::nan("")), std::nullopt});
    double ratio = std::nan("");
    try {
      ratio = weak_condition_ratio(params, sc.s);
    } catch (const NumericalError&) {
    }
    rows.push_back({"weak_condition_ratio", ratio, std::nullopt});
  }
  rows.push_back({"expected_outcome", expected_outcome(psi, params), std::nullopt});
  rows.push_back({"spin_variance", spin_variance(psi).variance, std::nullopt});
  return rows;
}

std::vector<MetricRow> preset_metrics(const std::string& preset) {
  const Scenario sc = preset_scenario(preset);
  if (preset == "paper-4-1-prep") return prep_metrics(sc);
  const MeasurementParams params = measurement_params(sc);
  const SpinState psi = resolve_state(sc.state, sc.s);
  require_reversible(params, sc.s);
  const JointTable joint = joint_measure(psi, params);
  if (preset == "paper-3-1") {
    return {{"avg_fidelity_first", measure(psi, params).average_fidelity(), 2},
            {"avg_fidelity_joint", joint.average_fidelity(), 2},
            {"q", joint.recovery_probability(), 2},
            {"q_prime", joint.approx_recovery_probability(), 2},
            {"delta_m", recovery_width(params), 1}};
  }
  if (preset == "paper-4-2") {
    return {{"avg_fidelity_first", measure(psi, params).average_fidelity(), 3},
            {"avg_fidelity_joint", joint.average_fidelity(), 3},
            {"delta_m_tilde", weak_width(params, sc.s), 1},
            {"q_prime", joint.approx_recovery_probability(), 5}};
  }
  const int decimals = preset == "paper-4-3-zcat" ? 2 : 5;
  return {{"q_prime", joint.approx_recovery_probability(), decimals}};
}

CsvTable metrics_table(const std::vector<MetricRow>& rows) {
  CsvTable csv({"name", "value", "rounded"});
  for (const auto& r : rows) {
    csv.add_row({r.name, format_number(r.value), r.decimals ? format_fixed(r.value, *r.decimals) : ""});
  }
  return csv;
}

const std::vector<int>& figure_ids() {
  static const std::vector<int> ids{1, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  return ids;
}

Scenario figure_defaults(int id) {
  switch (id) {
    case 1:
    case 3:
    case 4:
    case 5:
    case 6:
    case 7:
      return Scenario{};
    case 8:
      return preset_scenario("paper-4-1-prep");
    case 9:
    case 10:
    case 11:
      return weak_defaults();
    default:
      throw UsageError("no figure with id " + std::to_string(id));
  }
}

CsvTable figure_table(int id, const Scenario& sc) {
  switch (id) {
    case 1: return coefficient_table(sc);
    case 3:
    case 9: return first_table(sc);
    case 4:
    case 10: return joint_table(sc, true);
    case 5:
    case 11: return joint_table(sc, false);
    case 6: return information_table(sc);
    case 7: return asymptotics_table(sc);
    case 8: return prep_table(sc);
    default: throw UsageError("no figure with id " + std::to_string(id));
  }
}

std::string figure_meta(int id, const Scenario& sc, const CsvTable& table) {
  std::string out = "figure=" + std::to_string(id) + "\n";
  out += std::string("content=") + figure_description(id) + "\n";
  out += describe(sc);
  if (id == 6) out += "gamma=" + format_angle(sc.gamma) + "\n";
  if (id == 7) out += "j_max=" + sc.j_max.to_string() + "\n";
  if (id == 8) {
    out += "m=" + sc.m.to_string() + "\n";
    out += "varphi=" + format_angle(sc.varphi) + "\n";
  }
  if (id == 3 || id == 4 || id == 5 || id == 9 || id == 10 || id == 11) {
    out += "reversing_theta=" + format_angle(kPi - sc.theta) + "\n";
    out += "reversing_phi=" + format_angle(wrap_angle(kPi - sc.phi)) + "\n";
  }
  out += "rows=" + std::to_string(table.rows()) + "\n";
  return out;
}

void write_figure(int id, const Scenario& sc, const std::filesystem::path& dir) {
  const CsvTable table = figure_table(id, sc);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string stem = "fig" + std::to_string(id);
  table.write(dir / (stem + ".csv"));
  write_text(dir / (stem + ".meta.txt"), figure_meta(id, sc, table));
}

unsigned sweep_threads() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("REVSPIN_THREADS");
  if (env == nullptr) return hw;
  const std::string text(env);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("REVSPIN_THREADS must be a positive integer, got '" + text + "'");
  }
  const unsigned long n = std::stoul(text);
  if (n == 0) throw UsageError("REVSPIN_THREADS must be a positive integer, got '0'");
  return static_cast<unsigned>(std::min<unsigned long>(n, 1024));
}

CsvTable run_sweep(const Scenario& base, const std::string& vary, const std::string& range,
                   unsigned threads) {
  const auto c1 = range.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : range.find(':', c1 + 1);
  if (c2 == std::string::npos || range.find(':', c2 + 1) != std::string::npos) {
    throw UsageError("--range expects A:B:STEP, got '" + range + "'");
  }
  const std::string a = range.substr(0, c1);
  const std::string b = range.substr(c1 + 1, c2 - c1 - 1);
  const std::string step = range.substr(c2 + 1);

  std::vector<Scenario> points;
  std::vector<std::string> labels;
  if (vary == "j") {
    const int lo = parse_half_int(a).twice();
    const int hi = parse_half_int(b).twice();
    const int st = parse_half_int(step).twice();
    if (st <= 0) throw UsageError("--range step must be positive");
    for (int t = lo; t <= hi; t += st) {
      Scenario sc = base;
      sc.j = HalfInt::from_twice(t);
      points.push_back(sc);
      labels.push_back(sc.j.to_string());
    }
  } else if (vary == "g" || vary == "theta" || vary == "phi") {
    const bool angle = vary != "g";
    const double lo = angle ? parse_angle(a) : parse_number(a);
    const double hi = angle ? parse_angle(b) : parse_number(b);
    const double st = angle ? parse_angle(step) : parse_number(step);
    if (!(st > 0.0)) throw UsageError("--range step must be positive");
    const long n = static_cast<long>(std::floor((hi - lo) / st + 1e-9)) + 1;
    for (long i = 0; i < n; ++i) {
      const double v = lo + static_cast<double>(i) * st;
      Scenario sc = base;
      (vary == "g" ? sc.g : vary == "theta" ? sc.theta : sc.phi) = v;
      points.push_back(sc);
      labels.push_back(format_number(v));
    }
  } else {
    throw UsageError("--vary must be one of j, g, theta, phi");
  }
  if (points.empty()) throw UsageError("--range selects no points");

  // Validate up front so worker threads only see computational failures.
  for (const auto& sc : points) {
    require_reversible(measurement_params(sc), sc.s);
  }
  const SpinState psi = resolve_state(base.state, base.s);

  std::vector<std::vector<std::string>> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        const MeasurementParams params = measurement_params(points[i]);
        const JointTable joint = joint_measure(psi, params);
        const bool is_half = points[i].s == kHalf;
        rows[i] = {labels[i],
                   num(measure(psi, params).average_fidelity()),
                   num(joint.average_fidelity()),
                   num(joint.approx_recovery_probability(points[i].threshold)),
                   is_half ? num(joint.recovery_probability()) : std::string{}};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, points.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  CsvTable csv({vary, "avg_fidelity_first", "avg_fidelity_joint", "q_prime", "q"});
  for (auto& r : rows) csv.add_row(std::move(r));
  return csv;
}

OracleCheck oracle_check(int max_twice_j, int max_twice_s, double tol) {
  if (max_twice_j < 0 || max_twice_s < 0) throw UsageError("oracle-check bounds must be >= 0");
  if (static_cast<std::size_t>(max_twice_j + 1) * static_cast<std::size_t>(max_twice_s + 1) >
      oracle::kMaxDimension) {
    throw UsageError("oracle-check dimension exceeds " + std::to_string(oracle::kMaxDimension));
  }
  const std::vector<double> thetas{0.1, kPi / 2, kPi - 0.1};
  const std::vector<double> phis{-2.5, 0.0, 2.5};
  const std::vector<double> gs{0.05, 0.675, 1.3};
  CsvTable csv({"j", "s", "max_deviation", "pass"});
  bool all = true;
  for (int tj = 0; tj <= max_twice_j; ++tj) {
    for (int ts = 0; ts <= max_twice_s; ++ts) {
      double worst = 0.0;
      for (double th : thetas) {
        for (double ph : phis) {
          for (double g : gs) {
            worst = std::max(worst, oracle::closed_form_deviation(
                                        MeasurementParams(HalfInt::from_twice(tj), th, ph, g),
                                        HalfInt::from_twice(ts)));
          }
        }
      }
      const bool ok = worst <= tol;
      all = all && ok;
      csv.add_row({HalfInt::from_twice(tj).to_string(), HalfInt::from_twice(ts).to_string(),
                   format_number(worst), ok ? "1" : "0"});
    }
  }
  return {std::move(csv), all};
}

}  // namespace revspin::cli
