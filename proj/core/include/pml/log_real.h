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

#ifndef PML_LOG_REAL_H_
#define PML_LOG_REAL_H_

#include <cmath>
#include <compare>
#include <limits>
#include <span>

#include "absl/status/statusor.h"

namespace pml {

// A non-negative real number stored as its natural logarithm. Zero is
// represented by -infinity. Products and sums never leave the log domain, so
// quantities such as 2^n for n in the millions stay representable.
class LogReal {
 public:
  constexpr LogReal() : log_(-std::numeric_limits<double>::infinity()) {}

  static constexpr LogReal FromLog(double log_value) {
    return LogReal(log_value);
  }
  static LogReal FromLinear(double value) { return LogReal(std::log(value)); }
  static constexpr LogReal Zero() { return LogReal(); }
  static constexpr LogReal One() { return LogReal(0.0); }

  constexpr double log() const { return log_; }
  // May overflow to +inf or underflow to 0; only call when the magnitude is
  // known to be representable.
  double ToLinear() const { return std::exp(log_); }
  bool IsZero() const { return std::isinf(log_) && log_ < 0; }
  bool IsFinite() const { return std::isfinite(log_); }

  LogReal& operator*=(LogReal other) {
    log_ += other.log_;
    return *this;
  }
  LogReal& operator/=(LogReal other) {
    log_ -= other.log_;
    return *this;
  }
  LogReal& operator+=(LogReal other);

  friend LogReal operator*(LogReal a, LogReal b) { return a *= b; }
  friend LogReal operator/(LogReal a, LogReal b) { return a /= b; }
  friend LogReal operator+(LogReal a, LogReal b) { return a += b; }

  friend constexpr auto operator<=>(LogReal a, LogReal b) {
    return a.log_ <=> b.log_;
  }
  friend constexpr bool operator==(LogReal a, LogReal b) {
    return a.log_ == b.log_;
  }

 private:
  explicit constexpr LogReal(double log_value) : log_(log_value) {}

  double log_;
};

// log(exp(a) + exp(b)) without overflow.
double LogAddExp(double a, double b);

// log(sum_i exp(values[i])), shifted by the maximum for stability. Returns an
// error for an empty list; a list of zeros sums to zero.
absl::StatusOr<LogReal> LogSumExp(std::span<const LogReal> values);

// Same aggregation over raw log values.
absl::StatusOr<double> LogSumExp(std::span<const double> log_values);

// log(2^n - 1) for n >= 1, accurate for small n and for n far beyond the
// double range of 2^n.
double LogTwoPowMinusOne(double n);

// log C(n, k) through the log-gamma function.
double LogBinomial(long long n, long long k);

// A real number of either sign stored as (sign, log|value|). Used where an
// expression subtracts exponentially large terms.
class SignedLogReal {
 public:
  constexpr SignedLogReal() = default;
  SignedLogReal(LogReal magnitude, int sign = 1)
      : sign_(magnitude.IsZero() ? 0 : (sign < 0 ? -1 : 1)),
        log_abs_(magnitude.log()) {}

  static SignedLogReal FromLinear(double value);
  static SignedLogReal FromLog(double log_abs, int sign = 1) {
    return SignedLogReal(LogReal::FromLog(log_abs), sign);
  }

  int sign() const { return sign_; }
  double log_abs() const { return log_abs_; }
  LogReal magnitude() const { return LogReal::FromLog(log_abs_); }
  bool IsPositive() const { return sign_ > 0; }

  // Only meaningful for representable magnitudes.
  double ToLinear() const { return sign_ * std::exp(log_abs_); }

  SignedLogReal operator-() const {
    SignedLogReal r = *this;
    r.sign_ = -r.sign_;
    return r;
  }
  friend SignedLogReal operator+(SignedLogReal a, SignedLogReal b);
  friend SignedLogReal operator-(SignedLogReal a, SignedLogReal b) {
    return a + (-b);
  }
  friend SignedLogReal operator*(SignedLogReal a, SignedLogReal b);

 private:
  int sign_ = 0;
  double log_abs_ = -std::numeric_limits<double>::infinity();
};

}  // namespace pml

#endif  // PML_LOG_REAL_H_
