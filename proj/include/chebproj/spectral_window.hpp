#pragma once

#include <stdexcept>

namespace chebproj {

/// Affine map of a Hamiltonian spectrum into [-1,1].
///
/// S is the ground-state energy estimate and E_upper the single-row
/// Gershgorin estimate of the highest eigenvalue. The window spans
/// [S, S + R] with R = alpha_stretch * E_upper - S; rescale() sends S
/// to -1 and S + R to +1. Energies below S map below -1, which is the
/// regime the wall projector exploits.
struct SpectralWindow {
    double S = 0.0;
    double E_upper = 0.0;
    double alpha_stretch = 1.1;
    double R = 0.0;

    SpectralWindow() = default;

    SpectralWindow(double s, double e_upper, double stretch)
        : S(s), E_upper(e_upper), alpha_stretch(stretch),
          R(stretch * e_upper - s) {
        if (!(R > 0.0))
            throw std::invalid_argument("SpectralWindow: R must be positive");
    }

    /// Window with an explicitly chosen range R (S + R is the upper edge).
    static SpectralWindow from_range(double s, double range) {
        if (!(range > 0.0))
            throw std::invalid_argument("SpectralWindow: R must be positive");
        SpectralWindow w;
        w.S = s;
        w.alpha_stretch = 1.0;
        w.R = range;
        w.E_upper = s + range;
        return w;
    }

    double rescale(double energy) const { return 2.0 * (energy - S) / R - 1.0; }
    double unrescale(double x) const { return S + 0.5 * R * (x + 1.0); }
};

} // namespace chebproj
