#include "coxblock/ext_spectral.hpp"

#include <stdexcept>

namespace coxblock {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

void require_classical(const RootSubset& I, const char* who) {
    if (!I.is_classical())
        throw std::invalid_argument(std::string(who) + ": requires a classical subset");
}

}  // namespace

long long PoincarePolynomial::at(int degree) const {
    auto it = coeffs.find(degree);
    return it == coeffs.end() ? 0 : it->second;
}

long long PoincarePolynomial::eval_at_one() const {
    long long s = 0;
    for (auto [deg, c] : coeffs) s += c;
    return s;
}

long long PoincarePolynomial::eval_at_minus_one() const {
    long long s = 0;
    for (auto [deg, c] : coeffs) s += (deg % 2 == 0) ? c : -c;
    return s;
}

PoincarePolynomial PoincarePolynomial::shifted(int k) const {
    PoincarePolynomial out;
    for (auto [deg, c] : coeffs) out.coeffs[deg + k] = c;
    return out;
}

int dim_Y(const RootSubset& I) {
    require_classical(I, "dim_Y");
    return I.rank() - 1 - I.size();
}

PoincarePolynomial ext_poincare(ExtKind kind, const RootSubset& J, const RootSubset& I) {
    require_classical(I, "ext_poincare (I)");
    const int d = I.rank();
    if (J.rank() != d) throw std::invalid_argument("ext_poincare: rank mismatch");
    if (I == RootSubset::classical_full(d))
        throw std::invalid_argument("ext_poincare: I must be a strict subset of the classical set");
    if (kind == ExtKind::pi_i) {
        if (!J.is_strict())
            throw std::invalid_argument("ext_poincare: the full affine set indexes no class");
        if (J.contains(0)) return {};
        return ext_poincare(ExtKind::vi, J, I);
    }
    require_classical(J, "ext_poincare (J)");

    PoincarePolynomial out;
    const int m = dim_Y(I);
    if (kind == ExtKind::ii) {
        if ((J.bits() & I.bits()) != I.bits()) return {};   // J must contain I
        for (int k = 0; k <= m; ++k) out.coeffs[k] = binomial(m, k);
        return out;
    }
    // vi
    if ((I.bits() | J.bits()) != RootSubset::classical_full(d).bits()) return {};
    const int shift = d - 1 - J.size();   // |S \ J|
    for (int k = 0; k <= m; ++k) out.coeffs[k + shift] = binomial(m, k);
    return out;
}

E1Page e1_page(const RootSubset& I, int i) {
    require_classical(I, "e1_page");
    const int d = I.rank();
    if (i < 0 || i >= d) throw std::invalid_argument("e1_page: index i out of range [0, d)");

    E1Page page;
    page.d = d;
    page.I = I;
    page.i = i;

    const std::uint32_t s_bits = RootSubset::classical_full(d).bits();
    const RootSubset corner = j_corner(i, I);   // smallest contributing J
    for (const RootSubset& J : classical_subsets(d)) {
        if ((J.bits() & I.bits()) != I.bits()) continue;   // need J >= I
        const int p = -(J.size() - I.size());
        if (J.bits() == s_bits) {
            page.cells[{p, d - 1 - 2 * i}] += 1;
            continue;
        }
        if ((J.bits() & corner.bits()) != corner.bits()) continue;   // need {i+1..d-1} <= J
        const int m = d - 1 - J.size();   // dim Y_J
        for (int t = 0; t <= m; ++t) page.cells[{p, t + d - 1 - 2 * i}] += binomial(m, t);
    }
    return page;
}

bool euler_check(const RootSubset& I, int i) {
    const E1Page page = e1_page(I, i);
    long long sum = 0;
    for (const auto& [pq, dim] : page.cells) {
        const auto [p, q] = pq;
        sum += ((p + q) % 2 == 0) ? dim : -dim;
    }
    const long long expected = (partial(I, i) % 2 == 0) ? 1 : -1;
    return sum == expected;
}

}  // namespace coxblock
