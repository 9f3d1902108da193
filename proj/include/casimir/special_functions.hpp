#pragma once

namespace casimir {

/// Riemann zeta function for real s != 1.
///
/// Euler-Maclaurin corrected partial sums carry the evaluation for
/// s > -1/2; more negative arguments go through the functional equation
/// zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s).
/// Accuracy is about 1e-14 relative away from the trivial zeros.
/// Throws std::domain_error at the pole s = 1.
double zeta(double s);

/// Gamma function on the real line.
///
/// Lanczos approximation (g = 7, 9 terms) for x >= 1/2, reflection
/// formula below. Throws std::domain_error at the poles 0, -1, -2, ...
double gamma_fn(double x);

/// Negative-order polylogarithm Li_{-p}(x) = sum_{n>=1} n^p x^n in its
/// closed rational form, for p in {0, 1, 2} and 0 <= x < 1:
///   Li_0(x)  = x/(1-x)
///   Li_{-1}(x) = x/(1-x)^2
///   Li_{-2}(x) = x(1+x)/(1-x)^3
/// Throws std::domain_error for x outside [0, 1) and
/// std::invalid_argument for unsupported p.
double polylog_neg(int p, double x);

} // namespace casimir
