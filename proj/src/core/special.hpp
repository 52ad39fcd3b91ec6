// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace statkit {

// Euler gamma function, u > 0. Relative error below 1e-12 across the
// tested range (factorials, half-integers).
double gamma_fn(double u);

// log(Gamma(u)) for u > 0; safe for arguments where Gamma overflows.
double ln_gamma(double u);

// Error function and complement, |relative error| < 1e-12.
double erf_fn(double x);
double erfc_fn(double x);

// Standard normal CDF via erfc, accurate in both tails.
double standard_normal_cdf(double x);

// Adaptive Simpson integration of f over [a, b] to absolute tolerance
// tol. The integrand must be finite on the closed interval.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

}  // namespace statkit
