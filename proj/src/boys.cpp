// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include "qforce/error.hpp"
#include "qforce/integrals.hpp"

namespace qforce {

namespace {

// Below this argument the power series for the highest order is summed and
// lower orders follow by downward recursion; above it F_0 is closed-form and
// upward recursion is stable.
constexpr double kSeriesLimit = 30.0;
constexpr double kAsymptoticLimit = 40.0;

}  // namespace

void boys(int n_max, double t, std::span<double> out) {
  if (n_max < 0 || out.size() < static_cast<std::size_t>(n_max) + 1) {
    throw Error(ErrorCode::kInvalidArgument, "boys: output span too small");
  }
  if (t < 0.0) throw Error(ErrorCode::kInvalidArgument, "boys: negative argument");
  const double et = std::exp(-t);
  if (t < kSeriesLimit) {
    const double base = 2.0 * n_max + 1.0;
    double term = 1.0 / base;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
      term *= 2.0 * t / (base + 2.0 * k);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    out[n_max] = et * sum;
    for (int m = n_max - 1; m >= 0; --m) out[m] = (2.0 * t * out[m + 1] + et) / (2.0 * m + 1.0);
    return;
  }
  const double f0 = 0.5 * std::sqrt(std::numbers::pi / t);
  out[0] = t < kAsymptoticLimit ? f0 * std::erf(std::sqrt(t)) : f0;
  for (int m = 0; m < n_max; ++m) out[m + 1] = ((2.0 * m + 1.0) * out[m] - et) / (2.0 * t);
}

double boys(int n, double t) {
  double buf[32];
  if (n < 0 || n > 31) throw Error(ErrorCode::kInvalidArgument, "boys: order out of range");
  boys(n, t, std::span<double>(buf, static_cast<std::size_t>(n) + 1));
  return buf[n];
}

}  // namespace qforce
