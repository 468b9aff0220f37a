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

// Gamma function and modified Bessel functions of the first kind, I_p(x), for
// real order p >= 0 and real argument x >= 0.
//
// I_p is evaluated from its power series for moderate x and from the Hankel
// large-argument expansion beyond that; every result carries an exponentially
// scaled copy e^{-x} I_p(x) so callers can form ratios long after I_p itself
// has overflowed. All functions are pure and thread-safe.

#pragma once

#include <cstdint>

namespace sphermoments {

/// Order of a modified Bessel function. Finite and non-negative.
class BesselOrder {
 public:
  /// Throws DomainError for negative or non-finite p.
  explicit BesselOrder(double p);

  double value() const noexcept { return p_; }

 private:
  double p_;
};

enum class BesselMethod : std::uint8_t {
  kSeries,
  kAsymptotic,
  kClosedFormHalfInteger,
};

const char* to_string(BesselMethod method) noexcept;

struct BesselEval {
  double value = 0.0;         // I_p(x); +inf when it overflows (see `overflow`)
  double scaled_value = 0.0;  // I_p(x) * e^{-x}, always finite
  double log_value = 0.0;     // log I_p(x); -inf when I_p(x) == 0
  bool overflow = false;
  BesselMethod method_used = BesselMethod::kSeries;
};

/// Gamma function for x > 0 (Lanczos, g = 7, 9 terms).
double gamma(double x);

/// log Gamma(x) for x > 0. Finite for every finite positive x.
double log_gamma(double x);

/// Arguments above this use the large-x expansion instead of the series.
double bessel_series_limit(double p) noexcept;

/// I_p(x). Throws DomainError for x < 0 or NaN input.
BesselEval bessel_i(BesselOrder p, double x);

/// log I_p(x), finite whenever I_p(x) > 0 (including x up to 1e300 and x
/// small enough that I_p(x) underflows).
double log_bessel_i(BesselOrder p, double x);

/// I_p(x) / I_{p-1}(x) for p >= 1/2, x >= 0. Lies in [0, 1); 0 at x = 0.
/// Computed from normalized partial sums so neither numerator nor
/// denominator is ever formed explicitly.
double bessel_ratio(BesselOrder p, double x);

namespace detail {

// Individual evaluation paths, exposed for the handover tests.
BesselEval bessel_i_series(double p, double x);
BesselEval bessel_i_asymptotic(double p, double x);
// Only valid for p in {0.5, 1.5, 2.5} and x > 0.
BesselEval bessel_i_half_integer(double p, double x);

}  // namespace detail

}  // namespace sphermoments
