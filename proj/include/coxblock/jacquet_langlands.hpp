#ifndef COXBLOCK_JACQUET_LANGLANDS_HPP
#define COXBLOCK_JACQUET_LANGLANDS_HPP

#include <vector>

#include "coxblock/grothendieck.hpp"

/*
 * Langlands-Jacquet transfer on the unipotent block: virtual classes of the
 * division-algebra side are integer vectors over the unramified characters
 * nu_D^j, j in Z/dZ.  The transfer of an irreducible [pi_I] is
 * (-1)^{|I|} * (sum over j outside I), and it extends linearly, killing
 * every properly induced class.
 */

namespace coxblock {

struct DVirtualClass {
    int d = 1;
    std::vector<long long> coeffs;   // coefficient of [nu_D^j] at index j

    DVirtualClass() = default;
    explicit DVirtualClass(int rank) : d(rank), coeffs(rank, 0) {}

    bool is_zero() const;
    DVirtualClass rotated(int k) const;   // index j -> j+k mod d

    bool operator==(const DVirtualClass&) const = default;
};

struct LJEffective {
    int sign = 1;            // (-1)^{|I|}
    RootSubset chars;        // support: the complement of I

    bool operator==(const LJEffective&) const = default;
};

DVirtualClass lj(const RootSubset& I);
LJEffective lj_effective(const RootSubset& I);
DVirtualClass lj_linear(const PiBasisClass& x);

}  // namespace coxblock

#endif
