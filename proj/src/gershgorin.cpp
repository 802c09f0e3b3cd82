#include "chebproj/gershgorin.hpp"

#include <stdexcept>

namespace chebproj {

namespace {

double row_upper(const DenseHermitian& h, int k) {
    double sum = h.entries(k, k).real();
    for (int j = 0; j < h.dim(); ++j)
        if (j != k) sum += std::abs(h.entries(k, j));
    return sum;
}

} // namespace

double gershgorin_upper(const DenseHermitian& h, std::optional<int> row) {
    const int dim = h.dim();
    if (dim == 0) throw std::invalid_argument("gershgorin_upper: empty matrix");
    int k;
    if (row) {
        k = *row;
        if (k < 0 || k >= dim)
            throw std::invalid_argument("gershgorin_upper: row out of range");
    } else {
        k = 0;
        for (int i = 1; i < dim; ++i)
            if (h.entries(i, i).real() > h.entries(k, k).real()) k = i;
    }
    return row_upper(h, k);
}

double gershgorin_upper_all_rows(const DenseHermitian& h) {
    double best = row_upper(h, 0);
    for (int k = 1; k < h.dim(); ++k) best = std::max(best, row_upper(h, k));
    return best;
}

double gershgorin_lower_all_rows(const DenseHermitian& h) {
    double best = 0.0;
    for (int k = 0; k < h.dim(); ++k) {
        double sum = h.entries(k, k).real();
        for (int j = 0; j < h.dim(); ++j)
            if (j != k) sum -= std::abs(h.entries(k, j));
        best = (k == 0) ? sum : std::min(best, sum);
    }
    return best;
}

SpectralWindow make_window(double s, const DenseHermitian& h,
                           double alpha_stretch) {
    if (alpha_stretch < 1.0)
        throw std::invalid_argument("make_window: alpha_stretch must be >= 1");
    return SpectralWindow(s, gershgorin_upper(h), alpha_stretch);
}

} // namespace chebproj
