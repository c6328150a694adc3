#ifndef COXBLOCK_COHOMOLOGY_HPP
#define COXBLOCK_COHOMOLOGY_HPP

#include <map>
#include <tuple>
#include <vector>

#include "coxblock/jacquet_langlands.hpp"
#include "coxblock/weil_deligne.hpp"

/*
 * The bigraded model of the derived coisotypical spaces R^*, graded by
 * cohomological degree n and two cyclic indices: i (Frobenius acts by
 * q^{-i}) and j (the division-algebra uniformizer acts by q^{-j}), with a
 * degree-2 Lefschetz operator moving (n,i,j) to (n+2, i-1, j).  For the
 * elliptic class of a strict subset I, column j vanishes iff j is in I and
 * every surviving cell is one-dimensional in degree -partial(c^{-j}I, i-j).
 */

namespace coxblock {

struct IsoComponent {
    int degree = 0;   // source cell; the target is (degree+2, (i-1) mod d, j)
    int i = 0;
    int j = 0;

    bool operator==(const IsoComponent&) const = default;
    auto operator<=>(const IsoComponent&) const = default;
};

struct BiGradedR {
    int d = 1;
    // (degree n, i, j) -> dimension; zero cells absent
    std::map<std::tuple<int, int, int>, int> dims;
    std::vector<IsoComponent> lefschetz;   // iso components, sorted

    int total_dim() const;
    bool operator==(const BiGradedR&) const = default;
};

// Semisimplified pair data: multiset of (j, direction-L object).
struct SSPair {
    int d = 1;
    std::vector<std::pair<int, WDObject>> entries;   // sorted by (j, object)

    void canonicalize();
    bool operator==(const SSPair&) const = default;
};

struct VerifyReport {
    RootSubset I;
    bool ok = false;
    SSPair lhs;
    SSPair rhs;
};

// Degree table of the elliptic class of I (Lefschetz components included).
BiGradedR r_star(const RootSubset& I);

// Iso components of the Lefschetz operator: present exactly when i is in I
// and j is not, each connecting degrees (n, n+2).
std::vector<IsoComponent> lefschetz(const RootSubset& I);

// Forget degrees: walk the Lefschetz chains of each nonzero column of
// r_star(I) and assemble them into strings.
SSPair semisimplify_lhs(const RootSubset& I);

// Transfer side: one copy of the elliptic object per character in the
// effective transfer support.
SSPair rhs(const RootSubset& I);

VerifyReport verify_main_theorem(const RootSubset& I);

// r_star and lefschetz commute with the Coxeter rotation acting on I and
// diagonally on (i,j).
bool twist_equivariance_check(const RootSubset& I, int k);

// One entry of the integral-cohomology report: degrees d-1+i carry the
// class of {1,...,i} Tate-twisted by -i (tensored with a symbolic induction
// multiplicity), and the middle degree extends the empty-set class by the
// cuspidal kernel.
struct LadicEntry {
    int degree = 0;
    std::vector<int> subset;        // indices of the classical subset {1..i}
    int tate_twist = 0;
    bool cuspidal_kernel = false;   // middle degree only

    bool operator==(const LadicEntry&) const = default;
};
std::vector<LadicEntry> ladic_cohomology(int d);

// The model for classes outside the elliptic family: identically zero.
BiGradedR non_elliptic_r_star(int d);

}  // namespace coxblock

#endif
