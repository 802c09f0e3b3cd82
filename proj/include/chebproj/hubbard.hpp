#pragma once

#include "chebproj/dense_hermitian.hpp"

#include <cstdint>
#include <vector>

namespace chebproj {

/// One-dimensional Hubbard chain,
///   H = -t sum_{i,s} (c^dag_{i,s} c_{i+1,s} + h.c.) + U sum_i n_{i,up} n_{i,dn},
/// restricted to a fixed (n_up, n_down) sector. Open boundary by default.
struct HubbardParams {
    int sites = 2;
    double t = 1.0;
    double u = 1.0;
    int n_up = 1;
    int n_down = 1;
    bool periodic = false;
};

/// Determinants of one Hubbard sector, ordered lexicographically by
/// (up_mask, down_mask). Mode convention: up-spin modes 0..n-1 then
/// down-spin modes n..2n-1, ascending site index within each block.
struct HubbardSector {
    HubbardParams params;
    std::vector<std::uint32_t> up_masks;   // per determinant
    std::vector<std::uint32_t> down_masks; // per determinant

    std::size_t size() const { return up_masks.size(); }
    /// Index into the full 2^(2n) occupation space: up bits low, down bits high.
    std::uint64_t full_space_index(std::size_t det) const;
    std::string label(std::size_t det) const; // per-site chars: . u d 2
};

HubbardSector enumerate_sector(const HubbardParams& p);

/// Sector Hamiltonian with fermionic signs from the ordered
/// occupation-number convention (matches the Jordan-Wigner mapping).
DenseHermitian build_hubbard(const HubbardParams& p);

} // namespace chebproj
