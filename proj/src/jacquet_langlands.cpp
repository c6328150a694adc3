#include "coxblock/jacquet_langlands.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxblock {

bool DVirtualClass::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

DVirtualClass DVirtualClass::rotated(int k) const {
    k %= d;
    if (k < 0) k += d;
    DVirtualClass out(d);
    for (int j = 0; j < d; ++j) out.coeffs[(j + k) % d] = coeffs[j];
    return out;
}

DVirtualClass lj(const RootSubset& I) {
    if (!I.is_strict())
        throw std::invalid_argument("lj: the full affine set indexes no class");
    const int d = I.rank();
    const long long sign = (I.size() % 2 == 0) ? 1 : -1;
    DVirtualClass out(d);
    for (int j = 0; j < d; ++j)
        if (!I.contains(j)) out.coeffs[j] = sign;
    return out;
}

LJEffective lj_effective(const RootSubset& I) {
    if (!I.is_strict())
        throw std::invalid_argument("lj_effective: the full affine set indexes no class");
    return {(I.size() % 2 == 0) ? 1 : -1, I.complement()};
}

DVirtualClass lj_linear(const PiBasisClass& x) {
    DVirtualClass out(x.d);
    for (auto [b, c] : x.coeffs) {
        const DVirtualClass term = lj(RootSubset(x.d, b));
        for (int j = 0; j < x.d; ++j) out.coeffs[j] += c * term.coeffs[j];
    }
    return out;
}

}  // namespace coxblock
