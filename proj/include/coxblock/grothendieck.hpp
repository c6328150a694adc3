#ifndef COXBLOCK_GROTHENDIECK_HPP
#define COXBLOCK_GROTHENDIECK_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "coxblock/combinatorics.hpp"

/*
 * Integer Grothendieck-group bookkeeping for the unipotent block.  Virtual
 * classes are finitely supported integer vectors over a basis indexed by
 * strict subsets of the affine cycle; all arithmetic is exact.
 */

namespace coxblock {

// Integer combination of the irreducible classes [pi_I], I strict.
struct PiBasisClass {
    int d = 1;
    std::map<std::uint32_t, long long> coeffs;   // subset bitmask -> coefficient

    PiBasisClass() = default;
    explicit PiBasisClass(int rank) : d(rank) {}

    long long coeff(const RootSubset& I) const;
    void add(const RootSubset& I, long long c);
    bool is_zero() const;

    PiBasisClass& operator+=(const PiBasisClass& o);
    PiBasisClass& operator-=(const PiBasisClass& o);
    bool operator==(const PiBasisClass&) const = default;
};

// Integer combination of the induced classes [i_I], I strict.
struct IBasisClass {
    int d = 1;
    std::map<std::uint32_t, long long> coeffs;

    IBasisClass() = default;
    explicit IBasisClass(int rank) : d(rank) {}

    long long coeff(const RootSubset& I) const;
    void add(const RootSubset& I, long long c);

    bool operator==(const IBasisClass&) const = default;
};

// Rows are the reductions of the l-adic classes v_I (I classical), columns
// the irreducibles [pi_J] (J strict); every entry is 0 or 1.
struct DecompositionMatrix {
    int d = 1;
    std::vector<RootSubset> rows;      // classical subsets, basis order
    std::vector<RootSubset> columns;   // strict subsets, basis order
    std::vector<std::vector<long long>> entries;
};

// [i_I] = sum of [pi_J] over strict J containing I.
PiBasisClass class_i(const RootSubset& I);

// [pi_I] expanded in the induced basis: coefficient (-1)^{|J \ I|} on every
// strict J containing I.
IBasisClass class_pi_in_i(const RootSubset& I);

// Linear substitution of class_i into an i-basis combination.
PiBasisClass expand_in_pi(const IBasisClass& x);

// Reduction of v_I: [pi_I] + [pi_{I u {0}}] for classical I != S, and
// [pi_S] for I = S.
PiBasisClass class_v(const RootSubset& I);

// [pi_{{1..i}}] + [pi_{{0..i}}], with {1..i} = {} for i = 0; at i = d-1 the
// second index set is the full affine set and the class is [pi_S] alone.
PiBasisClass class_hbar(int d, int i);

// Basis permutation induced by the Coxeter rotation c^k.
PiBasisClass twist_class(const PiBasisClass& x, int k);

DecompositionMatrix decomposition_matrix(int d);

}  // namespace coxblock

#endif
