#pragma once

#include "chebproj/dense_hermitian.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chebproj {

/// Electron-integral tables read from an FCIDUMP file. One-body h_pq is
/// stored symmetric; two-body (pq|rs) is in chemists' notation, fully
/// expanded over the 8 permutation images. Indices are 0-based internally.
struct IntegralSet {
    int norb = 0;
    int nelec = 0;
    int ms2 = 0;
    double core_energy = 0.0;
    std::vector<double> one_body; // norb^2, h[p*norb+q]
    std::vector<double> two_body; // norb^4, (pq|rs)chemists

    double h1(int p, int q) const { return one_body[p * norb + q]; }
    double eri(int p, int q, int r, int s) const {
        return two_body[((p * norb + q) * norb + r) * norb + s];
    }
    void set_h1(int p, int q, double v);
    void set_eri(int p, int q, int r, int s, double v); // all 8 images
};

/// Parse error with the 1-based line number where it occurred.
struct FcidumpParseError : std::runtime_error {
    int line;
    FcidumpParseError(int line_no, const std::string& what)
        : std::runtime_error("FCIDUMP line " + std::to_string(line_no) + ": " +
                             what),
          line(line_no) {}
};

/// Reads the conventional FCIDUMP layout: a namelist header with NORB,
/// NELEC, MS2 (comma- or whitespace-separated, terminated by &END or /),
/// then "value i j k l" lines with 1-based indices. i j 0 0 is one-body,
/// 0 0 0 0 the core energy, all four nonzero a two-body integral.
/// ORBSYM/ISYM are accepted and ignored.
IntegralSet parse_fcidump(std::istream& in);
IntegralSet parse_fcidump_file(const std::string& path);

/// Writes the stored integrals back out (unique permutation representatives
/// only). parse(serialize(x)) reproduces every stored value.
void serialize_fcidump(const IntegralSet& integrals, std::ostream& out);

/// Full-CI Hamiltonian over all (n_alpha, n_beta) determinants of norb
/// spatial orbitals, lexicographic on (alpha_mask, beta_mask). The diagonal
/// includes core_energy. Without allow_sector_mismatch the electron count
/// and spin projection must match the header's NELEC/MS2.
DenseHermitian build_molecular_hamiltonian(const IntegralSet& integrals,
                                           int n_alpha, int n_beta,
                                           bool allow_sector_mismatch = false);

} // namespace chebproj
