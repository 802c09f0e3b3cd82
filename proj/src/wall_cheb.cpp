#include "chebproj/wall_cheb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chebproj {

ChebSeries wall_cheb_coefficients(unsigned m) {
    std::vector<double> c(m + 1);
    const double norm = 1.0 / (1.0 + 2.0 * m);
    for (unsigned k = 0; k <= m; ++k) {
        double weight = (k == 0) ? 1.0 : 2.0;
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        c[k] = weight * sign * norm;
    }
    return ChebSeries(std::move(c));
}

NodeSet wall_cheb_nodes(unsigned m, const SpectralWindow& window) {
    if (m < 1)
        throw std::invalid_argument("wall_cheb_nodes: order must be >= 1");
    NodeSet set;
    set.order = m;
    set.window = window;
    set.nodes.reserve(m);
    for (unsigned nu = 1; nu <= m; ++nu) {
        double theta = nu * std::numbers::pi / (m + 0.5);
        // x_nu = -cos(theta), ascending in nu since theta < pi.
        set.nodes.push_back(window.S + 0.5 * window.R * (1.0 - std::cos(theta)));
    }
    return set;
}

double wall_cheb_eval(unsigned m, const SpectralWindow& window, double energy,
                      WallEvalMode mode) {
    if (!(window.R > 0.0))
        throw std::invalid_argument("wall_cheb_eval: degenerate window");
    if (mode == WallEvalMode::sum) {
        return wall_cheb_coefficients(m).eval(window.rescale(energy));
    }
    if (m == 0) return 1.0;
    NodeSet set = wall_cheb_nodes(m, window);
    double prod = 1.0;
    for (double a : set.nodes) prod *= (energy - a) / (window.S - a);
    return prod;
}

double convergence_factor(unsigned m, double spectral_range) {
    if (m < 1 || !(spectral_range > 0.0))
        throw std::invalid_argument("convergence_factor: need m >= 1, R > 0");
    return 2.0 * m * (m + 1.0) / (3.0 * spectral_range);
}

} // namespace chebproj
