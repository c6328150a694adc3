#ifndef COXBLOCK_WEIL_DELIGNE_HPP
#define COXBLOCK_WEIL_DELIGNE_HPP

#include <map>
#include <string>
#include <vector>

#include "coxblock/combinatorics.hpp"

/*
 * Calculus of Weil-Deligne objects whose semisimple part is a multiset of
 * unramified character lines nu_W^a, a in Z/dZ, and whose nilpotent
 * operator moves lines one step around the cycle.  An object is stored in
 * canonical form as a multiset of strings (Jordan chains); direction N
 * means the operator takes the a-line to the (a+1)-line, direction L the
 * a-line to the (a-1)-line.
 */

namespace coxblock {

enum class WDDirection { N, L };

// A string occupies the line indices top, top-1, ..., top-length+1 (mod d).
// The operator acts along it: downward from top for direction L, upward
// toward top for direction N.
struct WDString {
    int top = 0;
    int length = 1;

    bool operator==(const WDString&) const = default;
};

struct WDObject {
    int d = 1;
    WDDirection direction = WDDirection::L;
    std::vector<WDString> strings;   // canonical: (length desc, top asc)

    WDObject() = default;
    WDObject(int rank, WDDirection dir, std::vector<WDString> s);

    int dim() const;
    std::map<int, int> lines() const;   // line index -> multiplicity

    bool operator==(const WDObject&) const = default;
};

// Multiset of character indices, one slot per filtration depth n >= 0.
using PrimitiveParts = std::vector<std::map<int, int>>;

// The elliptic object attached to a strict subset I: lines {0,...,d-1} each
// once, direction L, operator component a -> a-1 exactly for a in I.  The
// strings are the maximal cyclic runs of I extended one step down, so the
// Jordan type is levi_partition(I).
WDObject wd_elliptic(const RootSubset& I);

// Multiset of string lengths.
Partition jordan_type(const WDObject& x);

// Primitive parts of the filtration attached to the nilpotent operator:
// a string of length n+1 contributes one line to slot n, placed at the
// terminal index of the operator's action along the string.
PrimitiveParts deligne_primitive_parts(const WDObject& x);

// Inverse of (lines, primitive parts) -> object on canonical forms.
WDObject wd_from_primitive_parts(int d, WDDirection dir, const PrimitiveParts& parts);

// Flip N <-> L keeping every string's support; an involution.
WDObject transpose_wd(const WDObject& x);

// Shift all line indices by k mod d.
WDObject twist_wd(const WDObject& x, int k);

// Explicit operator matrix on the basis of string cells, together with the
// line label of each basis vector.  M[r][c] = 1 means the operator sends
// cell c to cell r; labels[r] = labels[c] -/+ 1 mod d per direction.
struct WDMatrix {
    std::vector<std::vector<long long>> entries;
    std::vector<int> labels;
};
WDMatrix wd_operator_matrix(const WDObject& x);

std::string to_string(WDDirection dir);

}  // namespace coxblock

#endif
