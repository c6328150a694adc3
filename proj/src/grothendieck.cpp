#include "coxblock/grothendieck.hpp"

#include <bit>
#include <stdexcept>

namespace coxblock {

namespace {

void require_strict(const RootSubset& I, const char* who) {
    if (!I.is_strict())
        throw std::invalid_argument(std::string(who) + ": the full affine set indexes no class");
}

// supersets J of I inside S~, strict only
template <typename F>
void for_each_strict_superset(const RootSubset& I, F&& f) {
    const int d = I.rank();
    const std::uint32_t full = RootSubset::affine_full(d).bits();
    const std::uint32_t comp = full & ~I.bits();
    std::uint32_t x = 0;
    for (;;) {
        const std::uint32_t j = I.bits() | x;
        if (j != full) f(RootSubset(d, j));
        if (x == comp) break;
        x = (x - comp) & comp;
    }
}

}  // namespace

long long PiBasisClass::coeff(const RootSubset& I) const {
    if (I.rank() != d) throw std::invalid_argument("rank mismatch");
    auto it = coeffs.find(I.bits());
    return it == coeffs.end() ? 0 : it->second;
}

void PiBasisClass::add(const RootSubset& I, long long c) {
    if (I.rank() != d) throw std::invalid_argument("rank mismatch");
    require_strict(I, "PiBasisClass");
    auto it = coeffs.find(I.bits());
    const long long v = (it == coeffs.end() ? 0 : it->second) + c;
    if (v == 0) {
        if (it != coeffs.end()) coeffs.erase(it);
    } else {
        coeffs[I.bits()] = v;
    }
}

bool PiBasisClass::is_zero() const { return coeffs.empty(); }

PiBasisClass& PiBasisClass::operator+=(const PiBasisClass& o) {
    if (o.d != d) throw std::invalid_argument("rank mismatch");
    for (auto [b, c] : o.coeffs) add(RootSubset(d, b), c);
    return *this;
}

PiBasisClass& PiBasisClass::operator-=(const PiBasisClass& o) {
    if (o.d != d) throw std::invalid_argument("rank mismatch");
    for (auto [b, c] : o.coeffs) add(RootSubset(d, b), -c);
    return *this;
}

long long IBasisClass::coeff(const RootSubset& I) const {
    if (I.rank() != d) throw std::invalid_argument("rank mismatch");
    auto it = coeffs.find(I.bits());
    return it == coeffs.end() ? 0 : it->second;
}

void IBasisClass::add(const RootSubset& I, long long c) {
    if (I.rank() != d) throw std::invalid_argument("rank mismatch");
    require_strict(I, "IBasisClass");
    auto it = coeffs.find(I.bits());
    const long long v = (it == coeffs.end() ? 0 : it->second) + c;
    if (v == 0) {
        if (it != coeffs.end()) coeffs.erase(it);
    } else {
        coeffs[I.bits()] = v;
    }
}

PiBasisClass class_i(const RootSubset& I) {
    require_strict(I, "class_i");
    PiBasisClass out(I.rank());
    for_each_strict_superset(I, [&](const RootSubset& J) { out.add(J, 1); });
    return out;
}

IBasisClass class_pi_in_i(const RootSubset& I) {
    require_strict(I, "class_pi_in_i");
    IBasisClass out(I.rank());
    const int base = I.size();
    for_each_strict_superset(I, [&](const RootSubset& J) {
        out.add(J, ((J.size() - base) % 2 == 0) ? 1 : -1);
    });
    return out;
}

PiBasisClass expand_in_pi(const IBasisClass& x) {
    PiBasisClass out(x.d);
    for (auto [b, c] : x.coeffs) {
        PiBasisClass term = class_i(RootSubset(x.d, b));
        for (auto [tb, tc] : term.coeffs) out.add(RootSubset(x.d, tb), c * tc);
    }
    return out;
}

PiBasisClass class_v(const RootSubset& I) {
    if (!I.is_classical())
        throw std::invalid_argument("class_v: requires a classical subset");
    const int d = I.rank();
    PiBasisClass out(d);
    out.add(I, 1);
    if (I != RootSubset::classical_full(d)) out.add(I.with(0), 1);
    return out;
}

PiBasisClass class_hbar(int d, int i) {
    if (i < 0 || i >= d) throw std::invalid_argument("class_hbar: i out of range [0, d)");
    std::vector<int> idx;
    for (int k = 1; k <= i; ++k) idx.push_back(k);
    return class_v(RootSubset::from_indices(d, idx));
}

PiBasisClass twist_class(const PiBasisClass& x, int k) {
    PiBasisClass out(x.d);
    for (auto [b, c] : x.coeffs) out.add(RootSubset(x.d, b).shifted(k), c);
    return out;
}

DecompositionMatrix decomposition_matrix(int d) {
    DecompositionMatrix m;
    m.d = d;
    m.rows = classical_subsets(d);
    m.columns = strict_subsets(d);
    m.entries.reserve(m.rows.size());
    for (const RootSubset& I : m.rows) {
        const PiBasisClass row = class_v(I);
        std::vector<long long> e;
        e.reserve(m.columns.size());
        for (const RootSubset& J : m.columns) e.push_back(row.coeff(J));
        m.entries.push_back(std::move(e));
    }
    return m;
}

}  // namespace coxblock
