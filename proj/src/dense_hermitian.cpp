#include "chebproj/dense_hermitian.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace chebproj {

double DenseHermitian::hermiticity_residual() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

ExactSpectrum ExactSpectrum::compute(const DenseHermitian& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("ExactSpectrum: eigensolver failed");
    ExactSpectrum s;
    s.eigenvalues = solver.eigenvalues();
    s.eigenvectors = solver.eigenvectors();
    // Deterministic phase: largest-magnitude component real positive.
    for (int c = 0; c < s.eigenvectors.cols(); ++c) {
        int imax = 0;
        double best = 0.0;
        for (int r = 0; r < s.eigenvectors.rows(); ++r) {
            double a = std::abs(s.eigenvectors(r, c));
            if (a > best) {
                best = a;
                imax = r;
            }
        }
        std::complex<double> z = s.eigenvectors(imax, c);
        if (std::abs(z) > 0.0) s.eigenvectors.col(c) *= std::conj(z) / std::abs(z);
    }
    return s;
}

double ExactSpectrum::gap(double degeneracy_tol) const {
    const double e0 = eigenvalues(0);
    for (int i = 1; i < eigenvalues.size(); ++i)
        if (eigenvalues(i) > e0 + degeneracy_tol) return eigenvalues(i) - e0;
    return 0.0;
}

} // namespace chebproj
