#include "chebproj/filters.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chebproj {

double eigenstate_filter_eval(unsigned l, double delta, double x) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("eigenstate_filter_eval: need delta in (0,1)");
    const double scale = 1.0 - delta * delta;
    double num_arg = -1.0 + 2.0 * (x * x - delta * delta) / scale;
    double den_arg = -1.0 + 2.0 * (-delta * delta) / scale;
    return cheb_eval(l, num_arg) / cheb_eval(l, den_arg);
}

StepFit step_poly_fit(unsigned degree, double delta, double eps_target) {
    if (degree < 3)
        throw std::invalid_argument("step_poly_fit: degree must be >= 3");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("step_poly_fit: need delta in (0,1)");

    // Chebyshev sample points, restricted to |x| >= delta.
    const int n_grid = std::max<int>(4 * (degree + 1), 800);
    std::vector<double> xs;
    xs.reserve(n_grid);
    for (int j = 0; j < n_grid; ++j) {
        double x = std::cos(std::numbers::pi * (j + 0.5) / n_grid);
        if (std::abs(x) >= delta) xs.push_back(x);
    }

    const int rows = static_cast<int>(xs.size());
    const int cols = static_cast<int>(degree) + 1;
    Eigen::MatrixXd design(rows, cols);
    Eigen::VectorXd target(rows);
    for (int j = 0; j < rows; ++j) {
        double x = xs[j];
        target(j) = (x > 0.0) ? 1.0 : -1.0;
        double tkm1 = 1.0, tk = x;
        design(j, 0) = 1.0;
        if (cols > 1) design(j, 1) = x;
        for (int k = 2; k < cols; ++k) {
            double tkp1 = 2.0 * x * tk - tkm1;
            tkm1 = tk;
            tk = tkp1;
            design(j, k) = tk;
        }
    }

    Eigen::VectorXd coeff = design.colPivHouseholderQr().solve(target);

    StepFit fit;
    fit.series = ChebSeries(std::vector<double>(coeff.data(), coeff.data() + cols));

    // Uniform rescale so max |S| <= 1 everywhere on [-1,1].
    double peak = fit.series.max_abs_on_interval(10001);
    if (peak > 1.0) fit.series = fit.series.scaled(1.0 / peak);

    double worst = 0.0;
    const int n_check = 10001;
    for (int j = 0; j < n_check; ++j) {
        double x = -1.0 + 2.0 * j / (n_check - 1);
        if (std::abs(x) < delta) continue;
        double sgn = (x > 0.0) ? 1.0 : -1.0;
        worst = std::max(worst, std::abs(fit.series.eval(x) - sgn));
    }
    fit.achieved_eps = worst;
    fit.feasible = worst <= eps_target;
    return fit;
}

} // namespace chebproj
