#include "chebproj/hubbard.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace chebproj {

namespace {

std::vector<std::uint32_t> masks_with_popcount(int bits, int count) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << bits); ++m)
        if (std::popcount(m) == count) out.push_back(m);
    return out;
}

void check_params(const HubbardParams& p) {
    if (p.sites < 1 || p.sites > 6)
        throw std::invalid_argument("hubbard: sites must be in [1,6]");
    if (p.n_up < 0 || p.n_up > p.sites || p.n_down < 0 || p.n_down > p.sites)
        throw std::invalid_argument("hubbard: empty particle sector");
}

// Annihilate mode q in a combined occupation mask; returns false if empty.
// Sign convention: (-1)^(number of occupied modes below q).
bool apply_annihilate(std::uint64_t& mask, int q, int& sign) {
    if (!(mask >> q & 1)) return false;
    if (std::popcount(mask & ((std::uint64_t(1) << q) - 1)) % 2) sign = -sign;
    mask &= ~(std::uint64_t(1) << q);
    return true;
}

bool apply_create(std::uint64_t& mask, int p, int& sign) {
    if (mask >> p & 1) return false;
    if (std::popcount(mask & ((std::uint64_t(1) << p) - 1)) % 2) sign = -sign;
    mask |= std::uint64_t(1) << p;
    return true;
}

} // namespace

std::uint64_t HubbardSector::full_space_index(std::size_t det) const {
    return std::uint64_t(up_masks[det]) |
           (std::uint64_t(down_masks[det]) << params.sites);
}

std::string HubbardSector::label(std::size_t det) const {
    std::string s(params.sites, '.');
    for (int i = 0; i < params.sites; ++i) {
        bool up = up_masks[det] >> i & 1;
        bool dn = down_masks[det] >> i & 1;
        s[i] = up && dn ? '2' : up ? 'u' : dn ? 'd' : '.';
    }
    return s;
}

HubbardSector enumerate_sector(const HubbardParams& p) {
    check_params(p);
    HubbardSector sector;
    sector.params = p;
    auto ups = masks_with_popcount(p.sites, p.n_up);
    auto downs = masks_with_popcount(p.sites, p.n_down);
    for (auto u : ups)
        for (auto d : downs) {
            sector.up_masks.push_back(u);
            sector.down_masks.push_back(d);
        }
    return sector;
}

DenseHermitian build_hubbard(const HubbardParams& p) {
    HubbardSector sector = enumerate_sector(p);
    const int dim = static_cast<int>(sector.size());
    const int n = p.sites;

    std::unordered_map<std::uint64_t, int> index_of;
    for (int i = 0; i < dim; ++i) index_of[sector.full_space_index(i)] = i;

    // Bonds (i, i+1); the wrap bond only exists for periodic chains with
    // more than two sites (for n = 2 it would duplicate the open bond).
    std::vector<std::pair<int, int>> bonds;
    for (int i = 0; i + 1 < n; ++i) bonds.emplace_back(i, i + 1);
    if (p.periodic && n > 2) bonds.emplace_back(n - 1, 0);

    DenseHermitian h;
    h.entries = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) h.basis_labels.push_back(sector.label(i));

    for (int j = 0; j < dim; ++j) {
        std::uint64_t mask = sector.full_space_index(j);

        // On-site interaction: U per doubly occupied site.
        int doubles = std::popcount(std::uint32_t(sector.up_masks[j] &
                                                  sector.down_masks[j]));
        h.entries(j, j) += p.u * doubles;

        // Hopping: -t (c^dag_a c_b + c^dag_b c_a), both spin blocks.
        for (int spin = 0; spin < 2; ++spin) {
            int offset = spin * n;
            for (auto [site_a, site_b] : bonds) {
                int a = offset + site_a;
                int b = offset + site_b;
                for (auto [from, to] : {std::pair{b, a}, std::pair{a, b}}) {
                    std::uint64_t m = mask;
                    int sign = 1;
                    if (!apply_annihilate(m, from, sign)) continue;
                    if (!apply_create(m, to, sign)) continue;
                    h.entries(index_of.at(m), j) += -p.t * sign;
                }
            }
        }
    }
    return h;
}

} // namespace chebproj
