#include "chebproj/ite.hpp"

#include <cmath>
#include <stdexcept>

namespace chebproj {

double bessel_i(unsigned k, double tau) {
    if (tau < 0.0)
        throw std::invalid_argument("bessel_i: tau must be >= 0");
    if (tau == 0.0) return k == 0 ? 1.0 : 0.0;

    // I_k(tau) = sum_j (tau/2)^{2j+k} / (j! (j+k)!)
    const double half = 0.5 * tau;
    double term = 1.0;
    for (unsigned j = 1; j <= k; ++j) term *= half / j; // (tau/2)^k / k!
    double sum = term;
    const double half2 = half * half;
    for (unsigned j = 1; j < 500; ++j) {
        term *= half2 / (j * (j + static_cast<double>(k)));
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return sum;
}

ChebSeries ite_cheb_coefficients(double tau, unsigned q) {
    if (!(tau > 0.0))
        throw std::invalid_argument("ite_cheb_coefficients: tau must be > 0");
    if (q < 1)
        throw std::invalid_argument("ite_cheb_coefficients: q must be >= 1");
    std::vector<double> c(q + 1);
    c[0] = bessel_i(0, tau);
    for (unsigned k = 1; k <= q; ++k) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        c[k] = 2.0 * sign * bessel_i(k, tau);
    }
    return ChebSeries(std::move(c));
}

double ite_truncation_error(double tau, const ChebSeries& series,
                            int grid_points) {
    double worst = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        double x = -1.0 + 2.0 * i / (grid_points - 1);
        worst = std::max(worst, std::abs(std::exp(-tau * x) - series.eval(x)));
    }
    return worst;
}

namespace {

double first_order_error(double tau) {
    // max over [-1,1] of |exp(-tau x) - (I_0(tau) - 2 I_1(tau) x)|.
    // The maximum sits at an endpoint or at the single interior stationary
    // point tau*exp(-tau x) = -2 I_1(tau) has no solution for x in range
    // (both sides positive), so scan densely for robustness.
    const double i0 = bessel_i(0, tau);
    const double i1 = bessel_i(1, tau);
    double worst = 0.0;
    const int n = 4001;
    for (int i = 0; i < n; ++i) {
        double x = -1.0 + 2.0 * i / (n - 1);
        worst = std::max(worst,
                         std::abs(std::exp(-tau * x) - (i0 - 2.0 * i1 * x)));
    }
    return worst;
}

} // namespace

double ite_timestep_select(double trunc_budget) {
    if (!(trunc_budget > 0.0 && trunc_budget < 0.5))
        throw std::invalid_argument("ite_timestep_select: budget in (0, 0.5)");
    double lo = 0.0;   // error(lo) <= budget
    double hi = 4.0;   // error grows monotonically; 4 is far past any budget < 0.5
    while (first_order_error(hi) <= trunc_budget) hi *= 2.0;
    while (hi - lo > 1e-6) {
        double mid = 0.5 * (lo + hi);
        if (first_order_error(mid) <= trunc_budget)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace chebproj
