#ifndef COXBLOCK_EXT_SPECTRAL_HPP
#define COXBLOCK_EXT_SPECTRAL_HPP

#include <map>
#include <utility>

#include "coxblock/combinatorics.hpp"

/*
 * Graded Ext dimensions as exterior-algebra Poincare polynomials, and the
 * first-page bookkeeping of the spectral sequence that locates the single
 * abutment degree -partial(I, i).  Only dimensions are tracked; the module
 * structure behind them stays on paper.
 */

namespace coxblock {

struct PoincarePolynomial {
    // degree -> coefficient (>= 0); zero coefficients absent.
    // Degrees may be negative after shifts.
    std::map<int, long long> coeffs;

    long long at(int degree) const;
    bool is_zero() const { return coeffs.empty(); }
    long long eval_at_one() const;
    long long eval_at_minus_one() const;
    PoincarePolynomial shifted(int k) const;   // multiply by t^k

    bool operator==(const PoincarePolynomial&) const = default;
};

// dim of the character lattice of the Levi class modulo the center:
// d - 1 - |I| for classical I.
int dim_Y(const RootSubset& I);

enum class ExtKind { ii, vi, pi_i };

// Graded Ext dimensions between the standard classes, as a polynomial:
//   ii  : full exterior algebra on dim_Y(I) generators when J contains I;
//   vi  : the same shifted up by |S \ J| when I u J = S, zero otherwise;
//   pi_i: zero when 0 is in J, otherwise equal to vi on (J, I).
// I must be a strict classical subset throughout.
PoincarePolynomial ext_poincare(ExtKind kind, const RootSubset& J, const RootSubset& I);

struct E1Page {
    int d = 1;
    RootSubset I;
    int i = 0;
    std::map<std::pair<int, int>, long long> cells;   // (p, q) -> dimension

    E1Page() : I(RootSubset::empty_set(1)) {}
};

// First page over classical J >= I: column p = -|J \ I| stacks the exterior
// powers of Y_J starting at q = d-1-2i, with only J containing {i+1,...,d-1}
// contributing; support is the right triangle with corners
// (-|S\I|, d-1-2i), (-|J(i,I)\I|, d-1-2i), (-|J(i,I)\I|, 2d-2-2i-|J(i,I)|).
E1Page e1_page(const RootSubset& I, int i);

// Euler characteristic of the first page equals that of the one-dimensional
// abutment in degree -partial(I, i).
bool euler_check(const RootSubset& I, int i);

}  // namespace coxblock

#endif
