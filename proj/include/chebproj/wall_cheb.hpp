#pragma once

#include "chebproj/chebyshev.hpp"
#include "chebproj/spectral_window.hpp"

#include <vector>

namespace chebproj {

/// The energies a_1 < ... < a_m at which the order-m wall expansion
/// vanishes. In rescaled coordinates the nodes sit at
/// x_nu = -cos(nu*pi/(m+1/2)), all strictly inside (-1,1).
struct NodeSet {
    unsigned order = 0;
    std::vector<double> nodes;   // ascending, energy units
    SpectralWindow window;
};

/// Chebyshev series of the order-m wall expansion:
/// coefficient k is (2 - delta_{k0}) (-1)^k / (1 + 2m).
ChebSeries wall_cheb_coefficients(unsigned m);

/// Node energies a_nu = S + (R/2)(1 - cos(nu*pi/(m+1/2))), nu = 1..m.
NodeSet wall_cheb_nodes(unsigned m, const SpectralWindow& window);

enum class WallEvalMode { sum, product };

/// Scalar value of the order-m wall expansion at energy E.
/// sum mode evaluates the Chebyshev series at x(E); product mode evaluates
/// prod_nu (E - a_nu)/(S - a_nu). The two routes agree to ~1e-10.
double wall_cheb_eval(unsigned m, const SpectralWindow& window, double energy,
                      WallEvalMode mode);

/// Convergence factor gamma = 2m(m+1)/(3R): the negative derivative of the
/// order-m wall expansion at E = S, which sets the per-application damping
/// rate of states just above the wall.
double convergence_factor(unsigned m, double spectral_range);

} // namespace chebproj
