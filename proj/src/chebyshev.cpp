#include "chebproj/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace chebproj {

double cheb_eval(unsigned k, double x) {
    if (k == 0) return 1.0;
    if (k == 1) return x;
    double tkm1 = 1.0;
    double tk = x;
    for (unsigned j = 2; j <= k; ++j) {
        double tkp1 = 2.0 * x * tk - tkm1;
        tkm1 = tk;
        tk = tkp1;
    }
    return tk;
}

ChebSeries::ChebSeries(std::vector<double> c) : coefficients(std::move(c)) {
    if (coefficients.empty())
        throw std::invalid_argument("ChebSeries: empty coefficient list");
}

double ChebSeries::eval(double x) const {
    if (std::abs(x) > 1.0) return eval_terms(x);
    // Clenshaw recurrence.
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = coefficients.size(); i-- > 1;) {
        double b0 = coefficients[i] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return coefficients[0] + x * b1 - b2;
}

double ChebSeries::eval_terms(double x) const {
    double sum = coefficients[0];
    if (coefficients.size() == 1) return sum;
    double tkm1 = 1.0;
    double tk = x;
    sum += coefficients[1] * tk;
    for (std::size_t k = 2; k < coefficients.size(); ++k) {
        double tkp1 = 2.0 * x * tk - tkm1;
        tkm1 = tk;
        tk = tkp1;
        sum += coefficients[k] * tk;
    }
    return sum;
}

double ChebSeries::max_abs_on_interval(int grid_points) const {
    double best = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        double x = -1.0 + 2.0 * i / (grid_points - 1);
        best = std::max(best, std::abs(eval(x)));
    }
    return best;
}

ChebSeries ChebSeries::scaled(double factor) const {
    ChebSeries out = *this;
    for (double& c : out.coefficients) c *= factor;
    return out;
}

Parity parity_check(const ChebSeries& series, double tol) {
    bool odd_all_zero = true;
    bool even_all_zero = true;
    for (std::size_t k = 0; k < series.coefficients.size(); ++k) {
        if (std::abs(series.coefficients[k]) > tol) {
            if (k % 2 == 0)
                even_all_zero = false;
            else
                odd_all_zero = false;
        }
    }
    if (odd_all_zero && even_all_zero) return Parity::even; // zero series
    if (odd_all_zero) return Parity::even;
    if (even_all_zero) return Parity::odd;
    return Parity::none;
}

} // namespace chebproj
