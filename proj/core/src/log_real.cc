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

#include "pml/log_real.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/status/status.h"

namespace pml {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(exp(a) - exp(b)) for a >= b.
double LogSubExp(double a, double b) {
  if (b == kNegInf) return a;
  if (a == b) return kNegInf;
  return a + std::log(-std::expm1(b - a));
}

}  // namespace

double LogAddExp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

LogReal& LogReal::operator+=(LogReal other) {
  log_ = LogAddExp(log_, other.log_);
  return *this;
}

absl::StatusOr<double> LogSumExp(std::span<const double> log_values) {
  if (log_values.empty()) {
    return absl::InvalidArgumentError("empty aggregation");
  }
  const double max = *std::max_element(log_values.begin(), log_values.end());
  if (max == kNegInf) return kNegInf;
  if (std::isinf(max)) return max;
  // Neumaier-compensated sum of the shifted exponentials.
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : log_values) {
    const double term = std::exp(v - max);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return max + std::log(sum + compensation);
}

absl::StatusOr<LogReal> LogSumExp(std::span<const LogReal> values) {
  std::vector<double> logs;
  logs.reserve(values.size());
  for (LogReal v : values) logs.push_back(v.log());
  absl::StatusOr<double> result = LogSumExp(std::span<const double>(logs));
  if (!result.ok()) return result.status();
  return LogReal::FromLog(*result);
}

double LogTwoPowMinusOne(double n) {
  const double n_log2 = n * std::log(2.0);
  if (n_log2 < 1.0) return std::log(std::expm1(n_log2));
  return n_log2 + std::log1p(-std::exp(-n_log2));
}

double LogBinomial(long long n, long long k) {
  if (k < 0 || k > n) return kNegInf;
  if (k == 0 || k == n) return 0.0;
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

SignedLogReal SignedLogReal::FromLinear(double value) {
  if (value == 0.0) return SignedLogReal();
  return SignedLogReal(LogReal::FromLog(std::log(std::abs(value))),
                       value < 0 ? -1 : 1);
}

SignedLogReal operator+(SignedLogReal a, SignedLogReal b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  if (a.sign_ == b.sign_) {
    return SignedLogReal::FromLog(LogAddExp(a.log_abs_, b.log_abs_), a.sign_);
  }
  if (a.log_abs_ == b.log_abs_) return SignedLogReal();
  const SignedLogReal& big = a.log_abs_ > b.log_abs_ ? a : b;
  const SignedLogReal& small = a.log_abs_ > b.log_abs_ ? b : a;
  return SignedLogReal::FromLog(LogSubExp(big.log_abs_, small.log_abs_),
                                big.sign_);
}

SignedLogReal operator*(SignedLogReal a, SignedLogReal b) {
  if (a.sign_ == 0 || b.sign_ == 0) return SignedLogReal();
  return SignedLogReal::FromLog(a.log_abs_ + b.log_abs_, a.sign_ * b.sign_);
}

}  // namespace pml
