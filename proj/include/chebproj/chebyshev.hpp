#pragma once

#include <cstddef>
#include <vector>

namespace chebproj {

/// Chebyshev polynomial of the first kind, T_k(x).
/// Valid for any real x; outside [-1,1] the three-term recurrence is used,
/// which is adequate up to degree ~200 in double precision.
double cheb_eval(unsigned k, double x);

enum class Parity { even, odd, none };

/// A finite Chebyshev series sum_k c_k T_k(x) on [-1,1].
/// Coefficient k multiplies T_k; the list is never empty.
struct ChebSeries {
    std::vector<double> coefficients;

    ChebSeries() : coefficients{0.0} {}
    explicit ChebSeries(std::vector<double> c);

    std::size_t degree() const { return coefficients.size() - 1; }

    /// Clenshaw evaluation inside [-1,1]; falls back to term-by-term
    /// recurrence outside, where Clenshaw's backward pass loses accuracy.
    double eval(double x) const;

    /// Term-by-term evaluation, sum_k c_k T_k(x). Used as the independent
    /// route when checking Clenshaw.
    double eval_terms(double x) const;

    /// Maximum of |series| over a uniform grid on [-1,1].
    double max_abs_on_interval(int grid_points = 20001) const;

    ChebSeries scaled(double factor) const;
};

/// even iff all odd-index coefficients vanish (tol 1e-14), odd iff all
/// even-index coefficients vanish, none otherwise.
Parity parity_check(const ChebSeries& series, double tol = 1e-14);

} // namespace chebproj
