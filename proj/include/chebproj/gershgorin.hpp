#pragma once

#include "chebproj/dense_hermitian.hpp"
#include "chebproj/spectral_window.hpp"

#include <optional>

namespace chebproj {

/// Single-row Gershgorin upper estimate: H_kk + sum_{j != k} |H_kj|.
/// Default row is the one with the largest diagonal element — a likely,
/// but not guaranteed, bound on E_max; use gershgorin_upper_all_rows to
/// validate against the full scan.
double gershgorin_upper(const DenseHermitian& h,
                        std::optional<int> row = std::nullopt);

/// max_k (H_kk + sum_{j != k} |H_kj|): the rigorous Gershgorin upper bound.
double gershgorin_upper_all_rows(const DenseHermitian& h);

/// min_k (H_kk - sum_{j != k} |H_kj|): rigorous lower bound.
double gershgorin_lower_all_rows(const DenseHermitian& h);

/// Window with R = alpha_stretch * gershgorin_upper(H) - S.
SpectralWindow make_window(double s, const DenseHermitian& h,
                           double alpha_stretch = 1.1);

} // namespace chebproj
