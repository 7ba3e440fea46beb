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

#include "pml/oracle.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "pml/leakage.h"
#include "pml/random.h"

namespace pml {

absl::StatusOr<GainFunction> GainFunction::Create(
    std::vector<std::vector<double>> table) {
  if (table.empty() || table.front().empty()) {
    return absl::InvalidArgumentError("gain table must be non-empty");
  }
  for (const auto& row : table) {
    if (row.size() != table.front().size()) {
      return absl::InvalidArgumentError("gain table is ragged");
    }
    for (double g : row) {
      if (!(g >= 0.0) || !std::isfinite(g)) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "gain values must be finite and non-negative, got %g", g));
      }
    }
  }
  return GainFunction(std::move(table));
}

GainFunction GainFunction::Indicator(std::size_t num_secrets,
                                     std::size_t target) {
  std::vector<std::vector<double>> table(num_secrets, std::vector<double>(1));
  table[target][0] = 1.0;
  return GainFunction(std::move(table));
}

std::vector<double> PosteriorAt(const FiniteDistribution& prior,
                                std::span<const LogReal> channel_at_y) {
  std::vector<double> joint(prior.size());
  double max = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < prior.size(); ++x) {
    joint[x] = channel_at_y[x].log() + prior.log_prob(x).log();
    max = std::max(max, joint[x]);
  }
  if (std::isinf(max)) return prior.Probabilities();
  double total = 0.0;
  for (double& v : joint) {
    v = std::exp(v - max);
    total += v;
  }
  for (double& v : joint) v /= total;
  return joint;
}

double PosteriorExpectedGain(std::span<const double> posterior,
                             const GainFunction& gain,
                             std::span<const double> kernel) {
  double expected = 0.0;
  for (std::size_t w = 0; w < gain.num_guesses(); ++w) {
    double given_w = 0.0;
    for (std::size_t x = 0; x < posterior.size(); ++x) {
      given_w += posterior[x] * gain(x, w);
    }
    expected += kernel[w] * given_w;
  }
  return expected;
}

absl::StatusOr<double> GainRatio(const FiniteDistribution& prior,
                                 std::span<const LogReal> channel_at_y,
                                 const GainFunction& gain) {
  if (gain.num_secrets() != prior.size() ||
      channel_at_y.size() != prior.size()) {
    return absl::InvalidArgumentError("gain, channel and prior sizes differ");
  }
  const std::vector<double> posterior = PosteriorAt(prior, channel_at_y);
  const std::vector<double> p = prior.Probabilities();
  double best_posterior = 0.0;
  double best_prior = 0.0;
  for (std::size_t w = 0; w < gain.num_guesses(); ++w) {
    double post = 0.0;
    double pri = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      post += posterior[x] * gain(x, w);
      pri += p[x] * gain(x, w);
    }
    best_posterior = std::max(best_posterior, post);
    best_prior = std::max(best_prior, pri);
  }
  if (best_prior <= 0.0) return absl::InvalidArgumentError("degenerate gain");
  return std::log(best_posterior) - std::log(best_prior);
}

absl::StatusOr<double> RandomizedFunctionRatio(
    const FiniteDistribution& prior, std::span<const LogReal> channel_at_y,
    const FiniteMechanism& kernel) {
  if (kernel.num_inputs() != prior.size() ||
      channel_at_y.size() != prior.size()) {
    return absl::InvalidArgumentError("kernel, channel and prior sizes differ");
  }
  const std::vector<double> posterior = PosteriorAt(prior, channel_at_y);
  const std::vector<double> p = prior.Probabilities();
  double best_posterior = 0.0;
  double best_prior = 0.0;
  for (std::size_t u = 0; u < kernel.num_outputs(); ++u) {
    double post = 0.0;
    double pri = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      const double k = kernel.log_prob(x, u).ToLinear();
      post += posterior[x] * k;
      pri += p[x] * k;
    }
    best_posterior = std::max(best_posterior, post);
    best_prior = std::max(best_prior, pri);
  }
  if (best_prior <= 0.0) {
    return absl::InvalidArgumentError("P_U has no positive atom");
  }
  return std::log(best_posterior) - std::log(best_prior);
}

absl::StatusOr<ExplicitJointModel> EnumerateJoint(const DatabaseModel& model,
                                                  std::uint64_t cutoff) {
  const DatabaseShape shape = model.shape();
  absl::StatusOr<std::vector<Label>> labels =
      DatabaseLabels(shape.num_entries, model.alphabet(), cutoff);
  if (!labels.ok()) {
    return absl::ResourceExhaustedError("enumeration cutoff exceeded");
  }
  std::vector<LogReal> log_p;
  log_p.reserve(labels->size());
  std::vector<std::size_t> db(shape.num_entries);
  for (std::uint64_t index = 0; index < labels->size(); ++index) {
    DecodeDatabase(index, shape, db);
    log_p.push_back(model.LogProbability(db));
  }
  absl::StatusOr<FiniteDistribution> joint =
      FiniteDistribution::FromLogProbabilities(*labels, std::move(log_p));
  if (!joint.ok()) return joint.status();
  return ExplicitJointModel::Create(shape.num_entries, model.alphabet(),
                                    *std::move(joint));
}

namespace {

std::vector<Label> IndexLabels(std::size_t n) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Row-stochastic matrix with roughly one zero in five entries.
std::vector<std::vector<double>> RandomStochastic(Rng& rng, std::size_t rows,
                                                  std::size_t cols) {
  std::vector<std::vector<double>> m(rows, std::vector<double>(cols));
  for (auto& row : m) {
    double total = 0.0;
    for (double& v : row) {
      v = rng.Uniform01() < 0.2 ? 0.0 : rng.Uniform01();
      total += v;
    }
    if (total == 0.0) {
      row[rng.UniformIndex(cols)] = 1.0;
      total = 1.0;
    }
    for (double& v : row) v /= total;
  }
  return m;
}

struct RandomCase {
  FiniteDistribution prior;
  FiniteMechanism mechanism;
};

RandomCase DrawCase(Rng& rng, const OracleTrialConfig& config) {
  const std::size_t nx = 1 + rng.UniformIndex(config.max_secret_size);
  const std::size_t ny = 1 + rng.UniformIndex(config.max_guess_size);
  FiniteDistribution prior = *FiniteDistribution::FromProbabilities(
      IndexLabels(nx), rng.SimplexPoint(nx));
  FiniteMechanism mechanism = *FiniteMechanism::Create(
      IndexLabels(nx), IndexLabels(ny), RandomStochastic(rng, nx, ny));
  return {std::move(prior), std::move(mechanism)};
}

GainFunction DrawGain(Rng& rng, std::size_t nx, std::size_t max_guesses) {
  const std::size_t nw = 1 + rng.UniformIndex(max_guesses);
  std::vector<std::vector<double>> table(nx, std::vector<double>(nw));
  bool any_positive = false;
  for (auto& row : table) {
    for (double& g : row) {
      g = rng.Uniform01() < 0.2 ? 0.0 : rng.Uniform01();
      any_positive |= g > 0.0;
    }
  }
  if (!any_positive) table[0][0] = 1.0;
  return *GainFunction::Create(std::move(table));
}

class TrialRunner {
 public:
  explicit TrialRunner(OracleTrialReport& report) : report_(report) {}

  absl::Status Achievability(const FiniteDistribution& prior,
                             const FiniteMechanism& mechanism) {
    for (std::size_t y = 0; y < mechanism.num_outputs(); ++y) {
      const std::vector<LogReal> column = mechanism.ChannelAt(y);
      absl::StatusOr<LeakageReport> pml = PmlAt(prior, column);
      if (!pml.ok()) return pml.status();
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t x = 0; x < prior.size(); ++x) {
        absl::StatusOr<double> ratio =
            GainRatio(prior, column, GainFunction::Indicator(prior.size(), x));
        if (!ratio.ok()) return ratio.status();
        best = std::max(best, *ratio);
      }
      report_.max_achievability_error =
          std::max(report_.max_achievability_error, std::abs(best - pml->pml));
    }
    ++report_.trials_run;
    return absl::OkStatus();
  }

  absl::Status Gain(const FiniteDistribution& prior,
                    const FiniteMechanism& mechanism, const GainFunction& g) {
    for (std::size_t y = 0; y < mechanism.num_outputs(); ++y) {
      const std::vector<LogReal> column = mechanism.ChannelAt(y);
      absl::StatusOr<LeakageReport> pml = PmlAt(prior, column);
      if (!pml.ok()) return pml.status();
      absl::StatusOr<double> ratio = GainRatio(prior, column, g);
      if (!ratio.ok()) return ratio.status();
      report_.max_gain_violation =
          std::max(report_.max_gain_violation, *ratio - pml->pml);
    }
    ++report_.trials_run;
    return absl::OkStatus();
  }

  absl::Status Kernel(const FiniteDistribution& prior,
                      const FiniteMechanism& mechanism,
                      const FiniteMechanism& kernel) {
    for (std::size_t y = 0; y < mechanism.num_outputs(); ++y) {
      const std::vector<LogReal> column = mechanism.ChannelAt(y);
      absl::StatusOr<LeakageReport> pml = PmlAt(prior, column);
      if (!pml.ok()) return pml.status();
      absl::StatusOr<double> ratio =
          RandomizedFunctionRatio(prior, column, kernel);
      if (!ratio.ok()) return ratio.status();
      report_.max_kernel_violation =
          std::max(report_.max_kernel_violation, *ratio - pml->pml);
    }
    ++report_.trials_run;
    return absl::OkStatus();
  }

 private:
  OracleTrialReport& report_;
};

FiniteMechanism DrawKernel(Rng& rng, std::size_t nx, std::size_t max_outputs) {
  const std::size_t nu = 1 + rng.UniformIndex(max_outputs);
  return *FiniteMechanism::Create(IndexLabels(nx), IndexLabels(nu),
                                  RandomStochastic(rng, nx, nu));
}

}  // namespace

absl::StatusOr<OracleTrialReport> RunOracleTrials(
    const OracleTrialConfig& config, std::span<const OracleCase> fixed_cases) {
  if (config.achievability_trials + config.gain_trials + config.kernel_trials ==
      0) {
    return absl::InvalidArgumentError("empty trial set");
  }
  if (config.max_secret_size == 0 || config.max_guess_size == 0) {
    return absl::InvalidArgumentError("alphabet bounds must be positive");
  }
  OracleTrialReport report;
  report.seed = config.seed;
  TrialRunner runner(report);
  Rng rng(config.seed);

  for (const OracleCase& c : fixed_cases) {
    if (c.prior.size() != c.mechanism.num_inputs()) {
      return absl::InvalidArgumentError("fixed case prior/mechanism mismatch");
    }
    if (absl::Status s = runner.Achievability(c.prior, c.mechanism); !s.ok()) {
      return s;
    }
    for (int i = 0; i < 100; ++i) {
      if (absl::Status s =
              runner.Gain(c.prior, c.mechanism,
                          DrawGain(rng, c.prior.size(), config.max_guess_size));
          !s.ok()) {
        return s;
      }
      if (absl::Status s = runner.Kernel(
              c.prior, c.mechanism,
              DrawKernel(rng, c.prior.size(), config.max_guess_size));
          !s.ok()) {
        return s;
      }
    }
  }
  for (std::size_t t = 0; t < config.achievability_trials; ++t) {
    RandomCase c = DrawCase(rng, config);
    if (absl::Status s = runner.Achievability(c.prior, c.mechanism); !s.ok()) {
      return s;
    }
  }
  for (std::size_t t = 0; t < config.gain_trials; ++t) {
    RandomCase c = DrawCase(rng, config);
    const GainFunction g = DrawGain(rng, c.prior.size(), config.max_guess_size);
    if (absl::Status s = runner.Gain(c.prior, c.mechanism, g); !s.ok()) {
      return s;
    }
  }
  for (std::size_t t = 0; t < config.kernel_trials; ++t) {
    RandomCase c = DrawCase(rng, config);
    const FiniteMechanism kernel =
        DrawKernel(rng, c.prior.size(), config.max_guess_size);
    if (absl::Status s = runner.Kernel(c.prior, c.mechanism, kernel); !s.ok()) {
      return s;
    }
  }
  report.passed = report.max_achievability_error <= config.tolerance &&
                  report.max_gain_violation <= config.tolerance &&
                  report.max_kernel_violation <= config.tolerance;
  return report;
}

}  // namespace pml
