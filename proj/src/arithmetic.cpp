#include "coxblock/arithmetic.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace coxblock {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// smallest prime factor, or 0 when n < 2
std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2) return 0;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

bool is_prime_power(std::uint64_t n, std::uint64_t& base) {
    base = smallest_prime_factor(n);
    if (base == 0) return false;
    while (n % base == 0) n /= base;
    return n == 1;
}

bool is_power_of(std::uint64_t n, std::uint64_t ell) {
    while (n % ell == 0) n /= ell;
    return n == 1;
}

}  // namespace

bool validate_coxeter(std::uint64_t q, std::uint64_t ell, int d) {
    if (d < 1) throw std::invalid_argument("validate_coxeter: d must be >= 1");
    std::uint64_t p = 0;
    if (q < 2 || !is_prime_power(q, p))
        throw std::invalid_argument("validate_coxeter: q must be a prime power >= 2");
    if (!is_prime(ell)) throw std::invalid_argument("validate_coxeter: ell must be prime");
    if (ell == p) throw std::invalid_argument("validate_coxeter: ell must not divide q");

    const std::uint64_t base = q % ell;
    std::uint64_t x = base;
    std::uint64_t order = 1;
    while (x != 1) {
        x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * base) % ell);
        ++order;
    }
    return order == static_cast<std::uint64_t>(d);
}

Params make_params(std::uint64_t q, std::uint64_t ell, int d) {
    return {q, ell, d, validate_coxeter(q, ell, d)};
}

std::uint64_t cuspidal_kernel_count(std::uint64_t q, std::uint64_t ell, int d) {
    if (!validate_coxeter(q, ell, d))
        throw std::invalid_argument("cuspidal_kernel_count: order of q mod ell must equal d");

    unsigned __int128 power = 1;
    for (int k = 0; k < d; ++k) {
        power *= q;
        if (power - 1 > (static_cast<unsigned __int128>(1) << 32))
            throw std::invalid_argument("cuspidal_kernel_count: q^d - 1 exceeds the brute-force cap 2^32");
    }
    const std::uint64_t n = static_cast<std::uint64_t>(power - 1);

    std::vector<bool> visited(n, false);   // index t <-> character x -> zeta^{tx}
    std::uint64_t orbits = 0;
    for (std::uint64_t t = 1; t < n; ++t) {
        if (visited[t]) continue;
        std::vector<std::uint64_t> orbit;
        std::uint64_t cur = t;
        do {
            visited[cur] = true;
            orbit.push_back(cur);
            cur = (cur * (q % n)) % n;
        } while (cur != t);
        const std::uint64_t order = n / std::gcd(t, n);
        if (static_cast<int>(orbit.size()) == d && is_power_of(order, ell)) ++orbits;
    }
    return orbits;
}

}  // namespace coxblock
