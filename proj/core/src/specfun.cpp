// Copyright 2026 The sphermoments Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sphermoments/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sphermoments/errors.hpp"

namespace sphermoments {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr int kMaxSeriesTerms = 500;
constexpr double kSeriesRelTol = 1e-17;
// exp() overflows just above this.
constexpr double kMaxExpArg = 709.78;

constexpr double kBelowOne = 1.0 - 0x1p-53;

constexpr double kRescaleThreshold = 1e280;
constexpr double kRescaleFactor = 1e-280;
const double kLogRescale = 280.0 * std::numbers::ln10;

void require_positive_finite(double x, const char* fn) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError(std::string(fn) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
  }
}

void require_bessel_argument(double x) {
  if (std::isnan(x)) throw DomainError("bessel: argument is NaN");
  if (x < 0.0) throw DomainError("bessel: argument must be >= 0, got " + std::to_string(x));
  if (std::isinf(x)) throw DomainError("bessel: argument must be finite");
}

double lanczos_sum(double z) {
  double a = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    a += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  return a;
}

// sum_{m>=0} r_m with r_0 = 1, r_m = r_{m-1} (x/2)^2 / (m (p + m)).
// Represented as `sum * exp(log_scale)` so large x and p never overflow.
struct NormalizedSeries {
  double sum = 1.0;
  double log_scale = 0.0;

  double log_value() const { return std::log(sum) + log_scale; }
};

NormalizedSeries normalized_series(double p, double x) {
  NormalizedSeries s;
  if (x == 0.0) return s;
  const double q = 0.25 * x * x;
  double r = 1.0;
  for (int m = 1; m <= kMaxSeriesTerms; ++m) {
    r *= q / (static_cast<double>(m) * (p + static_cast<double>(m)));
    s.sum += r;
    if (r < kSeriesRelTol * s.sum) return s;
    if (s.sum > kRescaleThreshold) {
      s.sum *= kRescaleFactor;
      r *= kRescaleFactor;
      s.log_scale += kLogRescale;
    }
  }
  throw ConvergenceError("bessel_i: power series did not converge in 500 terms (p=" +
                         std::to_string(p) + ", x=" + std::to_string(x) + ")");
}

// 1 + sum of the Hankel expansion terms; I_p(x) ~ e^x / sqrt(2 pi x) * result.
// Truncated once terms stop decreasing in magnitude.
double hankel_sum(double p, double x) {
  const double mu = 4.0 * p * p;
  double sum = 1.0;
  double term = 1.0;
  for (int m = 1; m <= kMaxSeriesTerms; ++m) {
    const double odd = 2.0 * m - 1.0;
    const double next = -term * (mu - odd * odd) / (8.0 * x * m);
    if (next == 0.0) break;
    if (std::abs(next) >= std::abs(term)) break;
    sum += next;
    term = next;
    if (std::abs(term) < kSeriesRelTol * std::abs(sum)) break;
  }
  return sum;
}

// (x/2)^p / Gamma(p+1), and its log.
struct SeriesPrefix {
  double value;
  double log_value;
};

SeriesPrefix series_prefix(double p, double x) {
  const double log_prefix = p * std::log(0.5 * x) - log_gamma(p + 1.0);
  if (p + 1.0 < 170.0) {
    const double direct = std::pow(0.5 * x, p) / gamma(p + 1.0);
    if (std::isnormal(direct)) return {direct, log_prefix};
  }
  return {std::exp(log_prefix), log_prefix};
}

void fill_from_log(BesselEval& out, double x) {
  if (out.log_value > kMaxExpArg) {
    out.value = std::numeric_limits<double>::infinity();
    out.overflow = true;
  }
  if (!out.overflow && out.value >= std::numeric_limits<double>::min()) {
    out.scaled_value = out.value * std::exp(-x);
  } else {
    out.scaled_value = std::exp(out.log_value - x);
  }
}

bool is_fast_half_integer(double p) { return p == 0.5 || p == 1.5 || p == 2.5; }

}  // namespace

BesselOrder::BesselOrder(double p) : p_(p) {
  if (!std::isfinite(p) || p < 0.0) {
    throw DomainError("Bessel order must be finite and >= 0, got " + std::to_string(p));
  }
}

const char* to_string(BesselMethod method) noexcept {
  switch (method) {
    case BesselMethod::kSeries:
      return "series";
    case BesselMethod::kAsymptotic:
      return "asymptotic";
    case BesselMethod::kClosedFormHalfInteger:
      return "closed_form_half_integer";
  }
  return "unknown";
}

double gamma(double x) {
  require_positive_finite(x, "gamma");
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate range.
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) *
         lanczos_sum(z);
}

double log_gamma(double x) {
  require_positive_finite(x, "log_gamma");
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double bessel_series_limit(double p) noexcept { return std::max(30.0, 0.5 * p * p + 10.0); }

namespace detail {

BesselEval bessel_i_series(double p, double x) {
  BesselEval out;
  out.method_used = BesselMethod::kSeries;
  if (x == 0.0) {
    out.value = out.scaled_value = (p == 0.0) ? 1.0 : 0.0;
    out.log_value = (p == 0.0) ? 0.0 : -std::numeric_limits<double>::infinity();
    return out;
  }
  const NormalizedSeries s = normalized_series(p, x);
  const SeriesPrefix prefix = series_prefix(p, x);
  out.log_value = prefix.log_value + s.log_value();
  out.value = (s.log_scale == 0.0) ? prefix.value * s.sum : std::exp(out.log_value);
  fill_from_log(out, x);
  return out;
}

BesselEval bessel_i_asymptotic(double p, double x) {
  BesselEval out;
  out.method_used = BesselMethod::kAsymptotic;
  const double h = hankel_sum(p, x);
  out.scaled_value = h / std::sqrt(2.0 * std::numbers::pi * x);
  out.log_value = x + std::log(out.scaled_value);
  if (x < kMaxExpArg) {
    out.value = out.scaled_value * std::exp(x);
  }
  if (x >= kMaxExpArg || std::isinf(out.value)) {
    out.value = std::numeric_limits<double>::infinity();
    out.overflow = true;
  }
  return out;
}

BesselEval bessel_i_half_integer(double p, double x) {
  BesselEval out;
  out.method_used = BesselMethod::kClosedFormHalfInteger;
  const double e2 = std::exp(-2.0 * x);
  const double sinh_scaled = -0.5 * std::expm1(-2.0 * x);
  const double cosh_scaled = 0.5 * (1.0 + e2);
  const double front = std::sqrt(2.0 / (std::numbers::pi * x));
  double shape = 0.0;
  if (p == 0.5) {
    shape = sinh_scaled;
  } else if (p == 1.5) {
    shape = cosh_scaled - sinh_scaled / x;
  } else if (p == 2.5) {
    shape = (1.0 + 3.0 / (x * x)) * sinh_scaled - 3.0 * cosh_scaled / x;
  } else {
    throw DomainError("bessel_i_half_integer: order must be 1/2, 3/2 or 5/2");
  }
  out.scaled_value = front * shape;
  out.log_value = x + std::log(out.scaled_value);
  if (x < kMaxExpArg) out.value = out.scaled_value * std::exp(x);
  if (x >= kMaxExpArg || std::isinf(out.value)) {
    out.value = std::numeric_limits<double>::infinity();
    out.overflow = true;
  }
  return out;
}

}  // namespace detail

BesselEval bessel_i(BesselOrder order, double x) {
  require_bessel_argument(x);
  const double p = order.value();
  const double limit = bessel_series_limit(p);
  if (x <= limit) {
    // Below x = 2 the closed forms lose digits to cancellation.
    if (is_fast_half_integer(p) && x >= 2.0) return detail::bessel_i_half_integer(p, x);
    return detail::bessel_i_series(p, x);
  }
  return detail::bessel_i_asymptotic(p, x);
}

double log_bessel_i(BesselOrder order, double x) { return bessel_i(order, x).log_value; }

double bessel_ratio(BesselOrder order, double x) {
  require_bessel_argument(x);
  const double p = order.value();
  if (p < 0.5) {
    throw DomainError("bessel_ratio: order must be >= 1/2, got " + std::to_string(p));
  }
  if (x == 0.0) return 0.0;
  double ratio = 0.0;
  if (p == 0.5) {
    ratio = std::tanh(x);  // I_{1/2} / I_{-1/2}
  } else if (x <= bessel_series_limit(p)) {
    const NormalizedSeries num = normalized_series(p, x);
    const NormalizedSeries den = normalized_series(p - 1.0, x);
    ratio = (x / (2.0 * p)) * (num.sum / den.sum) * std::exp(num.log_scale - den.log_scale);
  } else {
    ratio = hankel_sum(p, x) / hankel_sum(p - 1.0, x);
  }
  // The true ratio is < 1 but can round to (or just past) 1 for large x.
  return std::min(ratio, kBelowOne);
}

}  // namespace sphermoments
