#include "chebproj/pauli.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace chebproj {

double PauliSum::one_norm() const {
    double sum = 0.0;
    for (const auto& t : terms) sum += std::abs(t.coefficient);
    return sum;
}

double PauliSum::identity_coefficient() const {
    for (const auto& t : terms)
        if (t.word.find_first_not_of('I') == std::string::npos)
            return t.coefficient;
    return 0.0;
}

namespace {

void add_term(std::map<std::string, double>& acc, std::string word, double c) {
    acc[std::move(word)] += c;
}

std::string word_with(int n, std::initializer_list<std::pair<int, char>> ops) {
    std::string w(n, 'I');
    for (auto [q, c] : ops) w[q] = c;
    return w;
}

} // namespace

PauliSum jw_decompose(const HubbardParams& p) {
    const int n = p.sites;
    const int nq = 2 * n;
    std::map<std::string, double> acc;

    std::vector<std::pair<int, int>> bonds;
    for (int i = 0; i + 1 < n; ++i) bonds.emplace_back(i, i + 1);
    if (p.periodic && n > 2) bonds.emplace_back(0, n - 1); // a < b in mode order

    // Hopping: c^dag_a c_b + c^dag_b c_a = (X_a Z.. X_b + Y_a Z.. Y_b)/2
    // for modes a < b, with the Jordan-Wigner string on modes between them.
    for (int spin = 0; spin < 2; ++spin) {
        int offset = spin * n;
        for (auto [sa, sb] : bonds) {
            int a = offset + std::min(sa, sb);
            int b = offset + std::max(sa, sb);
            std::string xs = word_with(nq, {{a, 'X'}, {b, 'X'}});
            std::string ys = word_with(nq, {{a, 'Y'}, {b, 'Y'}});
            for (int q = a + 1; q < b; ++q) {
                xs[q] = 'Z';
                ys[q] = 'Z';
            }
            add_term(acc, xs, -0.5 * p.t);
            add_term(acc, ys, -0.5 * p.t);
        }
    }

    // U n_up n_down = U/4 (I - Z_up)(I - Z_down) per site.
    for (int i = 0; i < n; ++i) {
        int up = i, dn = n + i;
        add_term(acc, std::string(nq, 'I'), 0.25 * p.u);
        add_term(acc, word_with(nq, {{up, 'Z'}}), -0.25 * p.u);
        add_term(acc, word_with(nq, {{dn, 'Z'}}), -0.25 * p.u);
        add_term(acc, word_with(nq, {{up, 'Z'}, {dn, 'Z'}}), 0.25 * p.u);
    }

    PauliSum sum;
    sum.num_qubits = nq;
    for (auto& [word, coeff] : acc)
        if (std::abs(coeff) > 1e-15) sum.terms.push_back({coeff, word});
    return sum;
}

Eigen::VectorXcd apply_pauli_word(const std::string& word,
                                  const Eigen::VectorXcd& state) {
    const int nq = static_cast<int>(word.size());
    const std::int64_t dim = std::int64_t(1) << nq;
    if (state.size() != dim)
        throw std::invalid_argument("apply_pauli_word: dimension mismatch");

    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    std::int64_t flip = 0;
    for (int q = 0; q < nq; ++q)
        if (word[q] == 'X' || word[q] == 'Y') flip |= std::int64_t(1) << q;

    for (std::int64_t b = 0; b < dim; ++b) {
        std::complex<double> phase(1.0, 0.0);
        for (int q = 0; q < nq; ++q) {
            bool bit = b >> q & 1;
            switch (word[q]) {
                case 'Y':
                    phase *= bit ? std::complex<double>(0, -1)
                                 : std::complex<double>(0, 1);
                    break;
                case 'Z':
                    if (bit) phase = -phase;
                    break;
                default: break;
            }
        }
        out(b ^ flip) += phase * state(b);
    }
    return out;
}

Eigen::MatrixXcd pauli_word_dense(const std::string& word) {
    const int nq = static_cast<int>(word.size());
    const std::int64_t dim = std::int64_t(1) << nq;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    std::int64_t flip = 0;
    for (int q = 0; q < nq; ++q)
        if (word[q] == 'X' || word[q] == 'Y') flip |= std::int64_t(1) << q;
    for (std::int64_t b = 0; b < dim; ++b) {
        std::complex<double> phase(1.0, 0.0);
        for (int q = 0; q < nq; ++q) {
            bool bit = b >> q & 1;
            if (word[q] == 'Y')
                phase *= bit ? std::complex<double>(0, -1)
                             : std::complex<double>(0, 1);
            else if (word[q] == 'Z' && bit)
                phase = -phase;
        }
        m(b ^ flip, b) = phase;
    }
    return m;
}

Eigen::MatrixXcd pauli_sum_dense(const PauliSum& sum) {
    const std::int64_t dim = std::int64_t(1) << sum.num_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : sum.terms) m += t.coefficient * pauli_word_dense(t.word);
    return m;
}

} // namespace chebproj
