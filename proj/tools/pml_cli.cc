// Copyright 2026 The PML Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pml_cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "pml/bob.h"
#include "pml/correlated_binary.h"
#include "pml/leakage.h"
#include "pml/mechanism_spec.h"
#include "pml/mechanisms.h"
#include "pml/oracle.h"
#include "pml/sweep.h"
#include "result_table.h"
#include "svg_plot.h"

namespace pml::cli {
namespace {

// Raised for results that violate a checked bound; carries exit code 2.
struct Outcome {
  absl::Status status;
  bool violation = false;
};

Outcome Ok() { return {absl::OkStatus(), false}; }
Outcome Invalid(const std::string& field, const std::string& message) {
  return {absl::InvalidArgumentError(absl::StrCat(field, ": ", message)),
          false};
}
Outcome Failed(absl::Status status) { return {std::move(status), false}; }
Outcome Violation(const std::string& message) {
  return {absl::FailedPreconditionError(message), true};
}

struct OutputOptions {
  std::string out;
  bool reproducible = false;
  std::uint64_t seed = 0;
  std::optional<double> tol;
};

void AddOutputFlags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out, "CSV output path (default: stdout)");
  cmd->add_flag("--reproducible", o.reproducible,
                "Omit the timestamp row so reruns are byte-identical");
  cmd->add_option("--seed", o.seed, "Seed recorded with the results");
  cmd->add_option("--tol", o.tol, "Tolerance for bound checks");
}

// Inclusive grid of `count` points from start to stop.
absl::StatusOr<std::vector<double>> MakeGrid(const std::vector<double>& spec) {
  const double start = spec[0];
  const double stop = spec[1];
  const double count = spec[2];
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    return absl::InvalidArgumentError("--y-grid: endpoints must be finite");
  }
  if (!(count >= 1) || count != std::floor(count) || count > 1e7) {
    return absl::InvalidArgumentError(
        "--y-grid: COUNT must be an integer in [1, 1e7]");
  }
  const auto n = static_cast<std::size_t>(count);
  if (n == 1 && start != stop) {
    return absl::InvalidArgumentError(
        "--y-grid: COUNT 1 requires START == STOP");
  }
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] =
        n == 1 ? start : start + (stop - start) * double(i) / double(n - 1);
  }
  if (n > 1) grid.back() = stop;
  return grid;
}

void AddStandardMeta(ResultTable& table, const std::string& command,
                     const OutputOptions& o) {
  table.AddMeta("tool", "pml");
  table.AddMeta("version", kVersion);
  table.AddMeta("command", command);
  table.AddMeta("seed", absl::StrCat(o.seed));
}

absl::Status Emit(const ResultTable& table, const OutputOptions& o,
                  std::ostream& out) {
  if (o.out.empty()) {
    WriteCsv(table, !o.reproducible, out);
    return absl::OkStatus();
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) {
    return absl::InvalidArgumentError(
        absl::StrCat("--out: cannot open ", o.out));
  }
  WriteCsv(table, !o.reproducible, file);
  file.close();
  if (!file) {
    return absl::InternalError(absl::StrCat("--out: write failed for ", o.out));
  }
  return absl::OkStatus();
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeOptions {
  OutputOptions output;
  std::string spec;
  std::optional<double> y;
  std::vector<double> y_grid;
};

Outcome RunAnalyze(const AnalyzeOptions& o, std::ostream& out) {
  absl::StatusOr<MechanismSpec> spec = ReadMechanismSpec(o.spec);
  if (!spec.ok())
    return Invalid("--spec", std::string(spec.status().message()));
  absl::StatusOr<BuiltMechanism> built = BuildMechanism(*spec);
  if (!built.ok()) {
    return Invalid("--spec", std::string(built.status().message()));
  }
  const double tol = o.output.tol.value_or(kBoundSlack);

  ResultTable table;
  AddStandardMeta(table, "analyze", o.output);
  table.AddMeta("spec", o.spec);
  table.AddMeta("tol", FormatReal(tol));
  table.AddMeta("prior", absl::StrJoin(built->prior.Probabilities(), ";",
                                       [](std::string* s, double v) {
                                         s->append(FormatReal(v));
                                       }));
  table.columns = {"y", "pml_nats", "argmax_label", "eps_max"};

  std::vector<LeakageReport> reports;
  if (built->finite.has_value()) {
    if (o.y.has_value() || !o.y_grid.empty()) {
      return Invalid("--y", "finite mechanisms report every outcome");
    }
    table.AddMeta("kind", "finite");
    absl::StatusOr<std::vector<LeakageReport>> r =
        PmlProfile(built->prior, *built->finite);
    if (!r.ok()) return Failed(r.status());
    reports = *std::move(r);
  } else {
    const LaplaceMechanism& m = *built->laplace;
    std::vector<double> grid;
    if (o.y.has_value()) {
      if (!std::isfinite(*o.y)) return Invalid("--y", "must be finite");
      grid = {*o.y};
    } else if (!o.y_grid.empty()) {
      absl::StatusOr<std::vector<double>> g = MakeGrid(o.y_grid);
      if (!g.ok()) return Failed(g.status());
      grid = *std::move(g);
    } else {
      const auto [lo, hi] =
          std::minmax_element(m.centers().begin(), m.centers().end());
      absl::StatusOr<std::vector<double>> g =
          MakeGrid({*lo - 10 * m.scale(), *hi + 10 * m.scale(), 401});
      grid = *std::move(g);
    }
    table.AddMeta("kind", "laplace");
    table.AddMeta("scale", FormatReal(m.scale()));
    table.AddMeta("y_grid",
                  absl::StrCat(FormatReal(grid.front()), ";",
                               FormatReal(grid.back()), ";", grid.size()));
    absl::StatusOr<std::vector<LeakageReport>> r =
        PmlProfile(built->prior, m, grid);
    if (!r.ok()) return Failed(r.status());
    reports = *std::move(r);
  }

  bool violated = false;
  for (const LeakageReport& r : reports) {
    Cell y = r.outcome;
    if (built->laplace.has_value()) y = std::stod(r.outcome);
    if (absl::Status s = table.AddRow({y, r.pml, r.argmax_label, r.eps_max});
        !s.ok()) {
      return Failed(s);
    }
    violated |= r.pml < -tol || r.pml > r.eps_max + tol;
  }
  if (absl::Status s = Emit(table, o.output, out); !s.ok()) return Failed(s);
  if (violated) return Violation("pml outside [0, eps_max] beyond --tol");
  return Ok();
}

// ---- thm3: correlated binary sweep ----------------------------------------

struct CorrelatedSweepOptions {
  OutputOptions output;
  std::optional<std::int64_t> n;
  std::vector<std::int64_t> n_range;
  std::int64_t n_step = 1;
  bool n_doubling = false;
  double alpha = 0.25;
  double eta = 0.5;
  std::vector<double> eta_poly;
  double epsilon = 0.1;
  double y = 0.0;
  std::string svg;
  std::optional<double> delta;
};

absl::StatusOr<std::vector<std::int64_t>> NValues(
    const CorrelatedSweepOptions& o) {
  if (o.n.has_value() == !o.n_range.empty()) {
    return absl::InvalidArgumentError(
        "--n: give exactly one of --n or --n-range");
  }
  if (o.n.has_value()) {
    if (*o.n < 1) return absl::InvalidArgumentError("--n: must be >= 1");
    return std::vector<std::int64_t>{*o.n};
  }
  const std::int64_t start = o.n_range[0];
  const std::int64_t stop = o.n_range[1];
  if (start < 1 || stop < start) {
    return absl::InvalidArgumentError("--n-range: need 1 <= START <= STOP");
  }
  if (stop > 100'000'000) {
    return absl::InvalidArgumentError("--n-range: STOP must be <= 1e8");
  }
  if (o.n_step < 1) return absl::InvalidArgumentError("--n-step: must be >= 1");
  std::vector<std::int64_t> values;
  for (std::int64_t n = start; n <= stop;
       n = o.n_doubling ? 2 * n : n + o.n_step) {
    values.push_back(n);
    if (values.size() > 100'000) {
      return absl::InvalidArgumentError("--n-range: more than 1e5 rows");
    }
  }
  return values;
}

Outcome RunCorrelatedSweep(const CorrelatedSweepOptions& o, std::ostream& out) {
  if (!(o.alpha > 0.0 && o.alpha < 0.5)) {
    return Invalid("--alpha", absl::StrCat("must lie in (0, 0.5), got ",
                                           FormatReal(o.alpha)));
  }
  if (!(o.epsilon > 0.0) || !std::isfinite(o.epsilon)) {
    return Invalid("--epsilon", "must be positive and finite");
  }
  if (!std::isfinite(o.y)) return Invalid("--y", "must be finite");
  if (o.delta.has_value() && !(*o.delta > 0.0)) {
    return Invalid("--delta", "must be positive");
  }
  EtaSchedule schedule = EtaSchedule::Constant(o.eta);
  if (!o.eta_poly.empty()) {
    absl::StatusOr<EtaSchedule> poly =
        EtaSchedule::Polynomial(o.eta_poly[0], o.eta_poly[1]);
    if (!poly.ok()) {
      return Invalid("--eta-poly", std::string(poly.status().message()));
    }
    schedule = *poly;
  } else if (!(o.eta > 0.0 && o.eta < 1.0)) {
    return Invalid("--eta",
                   absl::StrCat("must lie in (0, 1), got ", FormatReal(o.eta)));
  }
  absl::StatusOr<std::vector<std::int64_t>> n_values = NValues(o);
  if (!n_values.ok()) return Failed(n_values.status());
  for (std::int64_t n : *n_values) {
    if (!schedule.At(n).ok()) {
      return Invalid("--eta-poly",
                     absl::StrCat("eta(n) leaves (0, 1) at n = ", n));
    }
  }

  SweepConfig config;
  config.alpha = o.alpha;
  config.eta = schedule;
  config.epsilon = o.epsilon;
  config.y = o.y;
  config.n_values = *n_values;
  absl::StatusOr<std::vector<SweepRow>> rows = Sweep(config);
  if (!rows.ok()) return Failed(rows.status());

  const double tol = o.output.tol.value_or(kBoundSlack);
  ResultTable table;
  AddStandardMeta(table, "thm3", o.output);
  table.AddMeta("alpha", FormatReal(o.alpha));
  if (o.eta_poly.empty()) {
    table.AddMeta("eta", FormatReal(o.eta));
  } else {
    table.AddMeta("eta_poly", absl::StrCat(FormatReal(o.eta_poly[0]), ";",
                                           FormatReal(o.eta_poly[1])));
  }
  table.AddMeta("epsilon", FormatReal(o.epsilon));
  table.AddMeta("y", FormatReal(o.y));
  table.AddMeta("n_values",
                absl::StrCat(n_values->front(), ";", n_values->back(), ";",
                             n_values->size()));
  table.AddMeta("enumeration_limit", absl::StrCat(config.enumeration_limit));
  table.AddMeta("tol", FormatReal(tol));
  if (o.delta.has_value()) table.AddMeta("delta", FormatReal(*o.delta));
  table.columns = {
      "n", "eta", "lower_bound", "exact_pml", "enumerated_pml", "eps_max"};

  // The lower bound is derived for outcomes y <= 0.
  const bool bound_applies = o.y <= 0.0;
  std::string violation;
  for (const SweepRow& r : *rows) {
    Cell enumerated;
    if (r.enumerated_pml.has_value()) enumerated = *r.enumerated_pml;
    if (absl::Status s = table.AddRow({double(r.n), r.eta, r.lower_bound,
                                       r.exact_pml, enumerated, r.eps_max});
        !s.ok()) {
      return Failed(s);
    }
    if (bound_applies && r.lower_bound > r.exact_pml + tol) {
      violation = absl::StrCat("lower_bound exceeds exact_pml at n = ", r.n);
    }
    if (r.exact_pml > r.eps_max + tol) {
      violation = absl::StrCat("exact_pml exceeds eps_max at n = ", r.n);
    }
    if (r.enumerated_pml.has_value() &&
        std::fabs(*r.enumerated_pml - r.exact_pml) > tol) {
      violation = absl::StrCat("enumeration disagrees at n = ", r.n);
    }
  }
  if (o.delta.has_value() &&
      !(rows->back().eps_max - rows->back().exact_pml < *o.delta)) {
    violation =
        absl::StrCat("eps_max - exact_pml >= delta at n = ", rows->back().n);
  }
  if (absl::Status s = Emit(table, o.output, out); !s.ok()) return Failed(s);

  if (!o.svg.empty()) {
    PlotOptions plot;
    plot.title =
        absl::StrFormat("alpha=%g, epsilon=%g, y=%g", o.alpha, o.epsilon, o.y);
    plot.x_label = "n";
    plot.y_label = "leakage (nats)";
    plot.log_x = n_values->back() >= 100 * n_values->front();
    const std::vector<PlotSeries> series = {
        {"lower bound", table.Series("n", "lower_bound"), "#d62728", false},
        {"exact", table.Series("n", "exact_pml"), "#1f77b4", false},
        {"eps_max", table.Series("n", "eps_max"), "#555555", true},
    };
    std::ofstream svg(o.svg, std::ios::binary);
    if (!svg) return Invalid("--svg", absl::StrCat("cannot open ", o.svg));
    svg << RenderLinePlot(series, plot);
  }
  if (!violation.empty()) return Violation(violation);
  return Ok();
}

// ---- bob ------------------------------------------------------------------

struct BobOptions {
  OutputOptions output;
  std::int64_t k = 5;
  double epsilon = 0.1;
  double scale = BobModel::kDefaultScale;
  std::optional<double> y;
  std::vector<double> y_grid;
};

Outcome RunBob(const BobOptions& o, std::ostream& out) {
  if (o.k < 1) return Invalid("--k", "must be >= 1");
  if (!(o.epsilon > 0.0) || !std::isfinite(o.epsilon)) {
    return Invalid("--epsilon", "must be positive and finite");
  }
  if (!(o.scale > 0.0) || !std::isfinite(o.scale)) {
    return Invalid("--scale", "must be positive and finite");
  }
  absl::StatusOr<BobModel> model =
      BobModel::Create(static_cast<std::size_t>(o.k), o.scale);
  if (!model.ok()) return Failed(model.status());

  std::vector<double> grid;
  if (o.y.has_value()) {
    if (!std::isfinite(*o.y)) return Invalid("--y", "must be finite");
    grid = {*o.y};
  } else {
    std::vector<double> spec = o.y_grid;
    if (spec.empty()) {
      spec = {0.0, o.scale * double(o.k + 1), double(20 * (o.k + 1) + 1)};
    }
    absl::StatusOr<std::vector<double>> g = MakeGrid(spec);
    if (!g.ok()) return Failed(g.status());
    grid = *std::move(g);
  }

  const double tol = o.output.tol.value_or(kBoundSlack);
  ResultTable table;
  AddStandardMeta(table, "bob", o.output);
  table.AddMeta("k", absl::StrCat(o.k));
  table.AddMeta("epsilon", FormatReal(o.epsilon));
  table.AddMeta("scale", FormatReal(o.scale));
  table.AddMeta("y_grid",
                absl::StrCat(FormatReal(grid.front()), ";",
                             FormatReal(grid.back()), ";", grid.size()));
  table.AddMeta("tol", FormatReal(tol));
  table.columns = {"y", "pml_nats", "argmax_label", "eps_max"};
  bool violated = false;
  for (double y : grid) {
    absl::StatusOr<LeakageReport> r = BobPml(*model, o.epsilon, y);
    if (!r.ok()) return Failed(r.status());
    if (absl::Status s = table.AddRow({y, r->pml, r->argmax_label, r->eps_max});
        !s.ok()) {
      return Failed(s);
    }
    violated |= r->pml > r->eps_max + tol;
  }
  if (absl::Status s = Emit(table, o.output, out); !s.ok()) return Failed(s);
  if (violated) return Violation("pml exceeds log k beyond --tol");
  return Ok();
}

// ---- oracle ---------------------------------------------------------------

struct OracleOptions {
  std::string out;
  std::uint64_t seed = OracleTrialConfig{}.seed;
  std::optional<std::size_t> trials;
  double tol = OracleTrialConfig{}.tolerance;
  std::string spec;
};

Outcome RunOracle(const OracleOptions& o, std::ostream& out) {
  std::vector<OracleCase> cases;
  if (!o.spec.empty()) {
    absl::StatusOr<MechanismSpec> spec = ReadMechanismSpec(o.spec);
    if (!spec.ok()) {
      return Invalid("--spec", std::string(spec.status().message()));
    }
    absl::StatusOr<BuiltMechanism> built = BuildMechanism(*spec);
    if (!built.ok()) {
      return Invalid("--spec", std::string(built.status().message()));
    }
    if (!built->finite.has_value()) {
      return Invalid("--spec", "oracle trials need a finite mechanism");
    }
    cases.push_back({built->prior, *built->finite});
  }
  if (!(o.tol >= 0.0)) return Invalid("--tol", "must be non-negative");
  OracleTrialConfig config;
  config.seed = o.seed;
  config.tolerance = o.tol;
  if (o.trials.has_value()) {
    config.achievability_trials = *o.trials;
    config.gain_trials = *o.trials;
    config.kernel_trials = *o.trials;
  }
  absl::StatusOr<OracleTrialReport> report = RunOracleTrials(config, cases);
  if (!report.ok()) {
    return Invalid("--trials", std::string(report.status().message()));
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) return Invalid("--out", absl::StrCat("cannot open ", o.out));
    sink = &file;
  }
  *sink << "seed=" << report->seed << "\n"
        << "achievability_trials=" << config.achievability_trials << "\n"
        << "gain_trials=" << config.gain_trials << "\n"
        << "kernel_trials=" << config.kernel_trials << "\n"
        << "fixed_cases=" << cases.size() << "\n"
        << "trials_run=" << report->trials_run << "\n"
        << "max_achievability_error="
        << FormatReal(report->max_achievability_error) << "\n"
        << "max_gain_violation=" << FormatReal(report->max_gain_violation)
        << "\n"
        << "max_kernel_violation=" << FormatReal(report->max_kernel_violation)
        << "\n"
        << "tolerance=" << FormatReal(config.tolerance) << "\n"
        << "result=" << (report->passed ? "pass" : "fail") << "\n";
  if (!report->passed) return Violation("oracle trials exceeded tolerance");
  return Ok();
}

// ---- dp-check -------------------------------------------------------------

struct DpCheckOptions {
  std::string out;
  std::string spec;
  std::optional<double> epsilon;
  double tol = 1e-12;
};

Outcome RunDpCheck(const DpCheckOptions& o, std::ostream& out) {
  absl::StatusOr<MechanismSpec> spec = ReadMechanismSpec(o.spec);
  if (!spec.ok())
    return Invalid("--spec", std::string(spec.status().message()));
  absl::StatusOr<BuiltMechanism> built = BuildMechanism(*spec);
  if (!built.ok()) {
    return Invalid("--spec", std::string(built.status().message()));
  }
  if (o.epsilon.has_value() && !(*o.epsilon >= 0.0)) {
    return Invalid("--epsilon", "must be non-negative");
  }
  double level = 0.0;
  std::string method;
  if (built->finite.has_value()) {
    absl::StatusOr<double> l = DpLevelFinite(*built->finite, built->shape);
    if (!l.ok()) {
      return Invalid("--spec", std::string(l.status().message()));
    }
    level = *l;
    method = "finite";
  } else {
    if (!built->sensitivity.has_value()) {
      return Invalid("--spec", "sensitivity: required for laplace dp-check");
    }
    level = DpLevelLaplace(built->laplace->scale(), *built->sensitivity);
    method = "laplace_analytic";
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) return Invalid("--out", absl::StrCat("cannot open ", o.out));
    sink = &file;
  }
  *sink << "method=" << method << "\n"
        << "dp_level=" << FormatReal(level) << "\n";
  if (o.epsilon.has_value()) {
    const bool meets = level <= *o.epsilon + o.tol;
    *sink << "target=" << FormatReal(*o.epsilon) << "\n"
          << "meets_target=" << (meets ? "yes" : "no") << "\n";
    if (!meets) return Violation("dp level exceeds target epsilon");
  }
  return Ok();
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Pointwise maximal leakage analysis"};
  app.set_config("--config", "", "TOML/INI file with option values");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Leakage of every outcome of a mechanism");
  AddOutputFlags(analyze_cmd, analyze.output);
  analyze_cmd->add_option("--spec", analyze.spec, "Mechanism spec (JSON)")
      ->required();
  auto* ay = analyze_cmd->add_option("--y", analyze.y, "Single outcome");
  analyze_cmd
      ->add_option("--y-grid", analyze.y_grid, "START STOP COUNT (inclusive)")
      ->expected(3)
      ->excludes(ay);

  CorrelatedSweepOptions thm3;
  CLI::App* thm3_cmd = app.add_subcommand(
      "thm3", "Correlated binary database: exact leakage of D_1 vs n");
  AddOutputFlags(thm3_cmd, thm3.output);
  auto* n_opt = thm3_cmd->add_option("--n", thm3.n, "Correlated entries n");
  thm3_cmd->add_option("--n-range", thm3.n_range, "START STOP")
      ->expected(2)
      ->excludes(n_opt);
  thm3_cmd->add_option("--n-step", thm3.n_step, "Step for --n-range");
  thm3_cmd->add_flag("--n-doubling", thm3.n_doubling,
                     "Double n across --n-range");
  thm3_cmd->add_option("--alpha", thm3.alpha, "P(D_1 = 0)");
  auto* eta_opt = thm3_cmd->add_option("--eta", thm3.eta, "Constant eta");
  thm3_cmd->add_option("--eta-poly", thm3.eta_poly, "c r: eta(n) = c / n^r")
      ->expected(2)
      ->excludes(eta_opt);
  thm3_cmd->add_option("--epsilon", thm3.epsilon, "DP level of the mechanism");
  thm3_cmd->add_option("--y", thm3.y, "Outcome");
  thm3_cmd->add_option("--svg", thm3.svg, "SVG plot path");
  thm3_cmd->add_option("--delta", thm3.delta,
                       "Require eps_max - exact_pml < delta on the last row");

  BobOptions bob;
  CLI::App* bob_cmd = app.add_subcommand(
      "bob", "Noisy patient count revealing one attribute value");
  AddOutputFlags(bob_cmd, bob.output);
  bob_cmd->add_option("--k", bob.k, "Number of attribute values");
  bob_cmd->add_option("--epsilon", bob.epsilon, "DP level");
  bob_cmd->add_option("--scale", bob.scale, "Patients per attribute unit");
  auto* by = bob_cmd->add_option("--y", bob.y, "Single outcome");
  bob_cmd->add_option("--y-grid", bob.y_grid, "START STOP COUNT (inclusive)")
      ->expected(3)
      ->excludes(by);

  OracleOptions oracle;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Adversary-model trials against the leakage formula");
  oracle_cmd->add_option("--out", oracle.out, "Report path (default: stdout)");
  oracle_cmd->add_option("--seed", oracle.seed, "Random seed");
  oracle_cmd->add_option("--trials", oracle.trials,
                         "Trials per family (default 1000/10000/10000)");
  oracle_cmd->add_option("--tol", oracle.tol, "Allowed violation");
  oracle_cmd->add_option("--spec", oracle.spec,
                         "Extra finite mechanism to include");

  DpCheckOptions dp;
  CLI::App* dp_cmd =
      app.add_subcommand("dp-check", "Differential privacy level of a spec");
  dp_cmd->add_option("--out", dp.out, "Report path (default: stdout)");
  dp_cmd->add_option("--spec", dp.spec, "Mechanism spec (JSON)")->required();
  dp_cmd->add_option("--epsilon", dp.epsilon, "Target level");
  dp_cmd->add_option("--tol", dp.tol, "Slack on the target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  Outcome result = Ok();
  if (*analyze_cmd) {
    result = RunAnalyze(analyze, out);
  } else if (*thm3_cmd) {
    result = RunCorrelatedSweep(thm3, out);
  } else if (*bob_cmd) {
    result = RunBob(bob, out);
  } else if (*oracle_cmd) {
    result = RunOracle(oracle, out);
  } else if (*dp_cmd) {
    result = RunDpCheck(dp, out);
  }
  if (result.status.ok()) return kExitOk;
  err << "error: " << result.status.message() << "\n";
  return result.violation ? kExitViolation : kExitValidation;
}

}  // namespace pml::cli
