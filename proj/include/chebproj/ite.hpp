#pragma once

#include "chebproj/chebyshev.hpp"

namespace chebproj {

/// Modified Bessel function of the first kind, I_k(tau), by direct power
/// series with term-ratio stopping at 1e-16. Intended for tau <= 50.
double bessel_i(unsigned k, double tau);

/// Chebyshev expansion of exp(-tau*x) truncated at degree q:
/// coefficient 0 is I_0(tau), coefficient k is 2(-1)^k I_k(tau).
ChebSeries ite_cheb_coefficients(double tau, unsigned q);

/// Largest timestep tau such that the first-order expansion
/// I_0(tau) - 2 I_1(tau) x stays within trunc_budget of exp(-tau*x)
/// on [-1,1]. Bisected to 1e-6.
double ite_timestep_select(double trunc_budget = 0.01);

/// Max over a dense grid on [-1,1] of |exp(-tau*x) - series(x)|.
double ite_truncation_error(double tau, const ChebSeries& series,
                            int grid_points = 2001);

} // namespace chebproj
