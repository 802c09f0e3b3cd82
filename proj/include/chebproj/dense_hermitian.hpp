#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace chebproj {

/// Dense complex Hermitian matrix over a labeled determinant basis.
/// The exact-arithmetic oracle every projector is checked against.
struct DenseHermitian {
    Eigen::MatrixXcd entries;
    std::vector<std::string> basis_labels;

    int dim() const { return static_cast<int>(entries.rows()); }

    /// Largest deviation from Hermiticity, max |H - H^dagger|.
    double hermiticity_residual() const;
};

/// Eigen-decomposition of a DenseHermitian, eigenvalues ascending.
/// Ground vector phase is fixed so its largest-magnitude component is
/// real positive, making traces reproducible.
struct ExactSpectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors; // column i <-> eigenvalues[i]

    static ExactSpectrum compute(const DenseHermitian& h);

    double ground_energy() const { return eigenvalues(0); }
    double max_energy() const { return eigenvalues(eigenvalues.size() - 1); }
    /// E_1 - E_0; skips exact degeneracies of the ground level.
    double gap(double degeneracy_tol = 1e-12) const;
    Eigen::VectorXcd ground_state() const { return eigenvectors.col(0); }
};

} // namespace chebproj
