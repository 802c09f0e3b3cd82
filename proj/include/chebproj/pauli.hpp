#pragma once

#include "chebproj/hubbard.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace chebproj {

/// Real-weighted sum of Pauli words. Word index j is the operator on
/// qubit j (qubit j <-> bit j of a basis index).
struct PauliSum {
    int num_qubits = 0;
    struct Term {
        double coefficient;
        std::string word; // over {I,X,Y,Z}, length num_qubits
    };
    std::vector<Term> terms;

    double one_norm() const;
    /// Coefficient of the all-identity word (0 if absent).
    double identity_coefficient() const;
};

/// Jordan-Wigner decomposition of the Hubbard Hamiltonian on 2n qubits,
/// up-spin modes on qubits 0..n-1, down-spin on n..2n-1.
PauliSum jw_decompose(const HubbardParams& p);

/// Dense matrix of a single Pauli word on the full 2^n space.
Eigen::MatrixXcd pauli_word_dense(const std::string& word);

/// Dense matrix of the full sum on the 2^num_qubits space.
Eigen::MatrixXcd pauli_sum_dense(const PauliSum& sum);

/// Apply one Pauli word to a statevector (used by the LCU SELECT).
Eigen::VectorXcd apply_pauli_word(const std::string& word,
                                  const Eigen::VectorXcd& state);

} // namespace chebproj
