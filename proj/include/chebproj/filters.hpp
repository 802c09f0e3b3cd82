#pragma once

#include "chebproj/chebyshev.hpp"

namespace chebproj {

/// Chebyshev-ratio eigenstate filter
///   R_l(x; D) = T_l(-1 + 2(x^2 - D^2)/(1 - D^2)) / T_l(-1 - 2 D^2/(1 - D^2)),
/// an even degree-2l polynomial with R_l(0) = 1 that decays like
/// 2 exp(-sqrt(2) l D) for |x| in [D, 1] when D <= 1/12.
double eigenstate_filter_eval(unsigned l, double delta, double x);

/// Outcome of approximating sgn(x) by a degree-d Chebyshev series.
/// achieved_eps is the measured max deviation from sgn on
/// [-1,-delta] u [delta,1]; feasible reports achieved_eps <= eps_target.
/// The series is rescaled so max |S| <= 1 on all of [-1,1].
struct StepFit {
    ChebSeries series;
    double achieved_eps = 1.0;
    bool feasible = false;
};

/// Least-squares Chebyshev fit of sgn(x) on a Chebyshev grid restricted to
/// |x| >= delta, then uniformly rescaled so max|S| <= 1 on [-1,1].
/// Never throws for an insufficient degree; the caller inspects feasible.
StepFit step_poly_fit(unsigned degree, double delta, double eps_target);

} // namespace chebproj
