#ifndef COXBLOCK_COMBINATORICS_HPP
#define COXBLOCK_COMBINATORICS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

/*
 * Root/Weyl combinatorics of GL_d over the affine Dynkin cycle Z/dZ.
 *
 * Node k of the cycle is the simple root alpha_k for k = 1,...,d-1; node 0
 * is the affine node (the negative of the highest root).  The classical set
 * S is {1,...,d-1}, the extended set is all of Z/dZ, and the Coxeter
 * rotation c acts by k -> k+1 mod d.  Subsets of the cycle index the
 * parabolic / representation data everywhere else in this library.
 */

namespace coxblock {

// Largest rank the bitmask representation supports.
inline constexpr int kMaxRank = 30;

// Enumeration of the symmetric group is gated at this rank (9! = 362880).
inline constexpr int kMaxEnumRank = 9;

class RootSubset {
public:
    RootSubset(int d, std::uint32_t bits);

    static RootSubset empty_set(int d) { return {d, 0u}; }
    static RootSubset classical_full(int d);   // S = {1,...,d-1}
    static RootSubset affine_full(int d);      // S~ = {0,...,d-1}
    static RootSubset from_indices(int d, const std::vector<int>& indices);

    int rank() const { return d_; }
    std::uint32_t bits() const { return bits_; }
    int size() const;
    bool contains(int k) const;                // k taken mod d
    bool empty() const { return bits_ == 0; }

    bool is_classical() const { return !contains(0); }
    bool is_strict() const;                    // proper subset of S~

    RootSubset shifted(int k) const;           // Coxeter rotation by c^k
    RootSubset with(int k) const;
    RootSubset complement() const;             // S~ \ I
    std::vector<int> indices() const;          // sorted ascending

    std::string to_string() const;             // "{1,3}"

    friend bool operator==(const RootSubset&, const RootSubset&) = default;
    // Basis order: (rank, cardinality, bitmask value).
    std::strong_ordering operator<=>(const RootSubset& o) const;

private:
    int d_;
    std::uint32_t bits_;
};

// All subsets of S~ with the given property, in basis order
// (cardinality, then bitmask value).
std::vector<RootSubset> strict_subsets(int d);      // I != S~
std::vector<RootSubset> classical_subsets(int d);   // I contained in S

struct Permutation {
    int d;
    std::vector<int> images;   // images[k] = w(k), a bijection of {0,...,d-1}

    static Permutation identity(int d);
    static Permutation coxeter(int d);         // i -> i+1 mod d

    int operator()(int k) const { return images[k]; }
    // (w o v)(x) = w(v(x))
    Permutation compose(const Permutation& v) const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
};

struct Partition {
    std::vector<int> parts;    // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int weight() const;
    Partition transpose() const;
    std::string to_string() const;             // "3,1"

    bool operator==(const Partition&) const = default;
};

// Exponent vector of a torus character, entries in Z/dZ.
using TorusCharacter = std::vector<int>;

// Which descent condition selects the Jacquet-module terms.
enum class JacquetKind { pi, v };

// --- operations ----------------------------------------------------------

// {(a+k) mod d : a in I}
RootSubset coxeter_shift(const RootSubset& I, int k);

// Partition mu_I of d attached to the Levi class of I: each maximal cyclic
// run of length r in I contributes a part r+1, every remaining node a part 1.
Partition levi_partition(const RootSubset& I);

// Partition lambda_I = transpose(mu_I), computed from descent depths:
// depth(a) = largest m >= 0 with a, a-1, ..., a-m+1 all in I, and the k-th
// part is #{a : depth(a) = k-1}.
Partition whittaker_partition(const RootSubset& I);

// (classical, affine) descent data of w:
//   classical = {i in {1,...,d-1} : w(i-1) < w(i)}
//   affine    = {j in Z/dZ : w(j-1 mod d) < w(j)}
std::pair<RootSubset, RootSubset> descents(const Permutation& w);

// Degree function: partial(I,k) = k - (|I u {1..k}| - |I n {1..k}|) for
// k in {0,...,d-1}, extended d-periodically to all of Z.  Requires 0 not in I.
int partial(const RootSubset& I, int k);

// Multiset of permuted exponent vectors of delta = (0,1,...,d-1): the
// vector (w(0),...,w(d-1)) for every w whose affine (kind pi) or classical
// (kind v) descent set equals I.  kind pi with I = {} returns the empty
// multiset (cuspidal case).  Enumerative; gated at rank kMaxEnumRank.
std::vector<TorusCharacter> jacquet_module(JacquetKind kind, const RootSubset& I);

// J(i,I) = I u {i+1,...,d-1} for classical I and 0 <= i <= d-1.
RootSubset j_corner(int i, const RootSubset& I);

// Exponent vector of the base character delta (the central factor dropped).
TorusCharacter delta_character(int d);

}  // namespace coxblock

#endif
