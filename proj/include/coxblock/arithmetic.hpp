#ifndef COXBLOCK_ARITHMETIC_HPP
#define COXBLOCK_ARITHMETIC_HPP

#include <cstdint>

/*
 * Concrete (q, l, d) parameter checks: the congruence "multiplicative order
 * of q mod l equals d", and the brute-force count of Frobenius orbits of
 * regular l-power-order characters of the degree-d extension's unit group,
 * which sizes the cuspidal kernel in the middle cohomology degree.
 */

namespace coxblock {

struct Params {
    std::uint64_t q = 2;
    std::uint64_t ell = 3;
    int d = 1;
    bool coxeter = false;   // ord(q mod ell) == d
};

// Throws on invalid inputs (q not a prime power, ell not a prime, ell | q,
// d < 1); otherwise reports whether ord(q mod ell) == d.
bool validate_coxeter(std::uint64_t q, std::uint64_t ell, int d);

Params make_params(std::uint64_t q, std::uint64_t ell, int d);

// Number of Frobenius orbits {theta, theta^q, ...} of nontrivial characters
// of Z/(q^d - 1) whose order is a power of ell and whose orbit has size
// exactly d.  Requires the congruence to hold; brute force over the full
// character group (rejected when q^d - 1 exceeds 2^32).
std::uint64_t cuspidal_kernel_count(std::uint64_t q, std::uint64_t ell, int d);

}  // namespace coxblock

#endif
