#include <doctest.h>

#include <stdexcept>

#include "coxblock/grothendieck.hpp"

using namespace coxblock;

namespace {

PiBasisClass unit(const RootSubset& I) {
    PiBasisClass x(I.rank());
    x.add(I, 1);
    return x;
}

// alternating sum over classical J >= I, the route through the exact complex
PiBasisClass class_v_via_complex(const RootSubset& I) {
    const int d = I.rank();
    PiBasisClass out(d);
    for (const RootSubset& J : classical_subsets(d)) {
        if ((J.bits() & I.bits()) != I.bits()) continue;
        const long long sign = ((J.size() - I.size()) % 2 == 0) ? 1 : -1;
        const PiBasisClass term = class_i(J);
        for (auto [b, c] : term.coeffs) out.add(RootSubset(d, b), sign * c);
    }
    return out;
}

}  // namespace

TEST_CASE("class_i sums over strict supersets") {
    const PiBasisClass a = class_i(RootSubset::empty_set(2));
    CHECK(a.coeffs.size() == 3);
    CHECK(a.coeff(RootSubset::empty_set(2)) == 1);
    CHECK(a.coeff(RootSubset::from_indices(2, {0})) == 1);
    CHECK(a.coeff(RootSubset::from_indices(2, {1})) == 1);

    CHECK(class_i(RootSubset::from_indices(2, {1})) == unit(RootSubset::from_indices(2, {1})));

    const PiBasisClass b = class_i(RootSubset::from_indices(3, {1}));
    CHECK(b.coeffs.size() == 3);
    CHECK(b.coeff(RootSubset::from_indices(3, {1})) == 1);
    CHECK(b.coeff(RootSubset::from_indices(3, {0, 1})) == 1);
    CHECK(b.coeff(RootSubset::from_indices(3, {1, 2})) == 1);

    CHECK_THROWS_AS(class_i(RootSubset::affine_full(2)), std::invalid_argument);
}

TEST_CASE("class_i of the empty set has multiplicity one everywhere") {
    for (int d = 1; d <= 8; ++d) {
        const PiBasisClass x = class_i(RootSubset::empty_set(d));
        CHECK(x.coeffs.size() == (1u << d) - 1);
        long long total = 0;
        for (auto [b, c] : x.coeffs) {
            CHECK(c == 1);
            total += c;
        }
        CHECK(total == (1 << d) - 1);
    }
}

TEST_CASE("class_pi_in_i carries alternating signs") {
    const IBasisClass a = class_pi_in_i(RootSubset::empty_set(2));
    CHECK(a.coeff(RootSubset::empty_set(2)) == 1);
    CHECK(a.coeff(RootSubset::from_indices(2, {0})) == -1);
    CHECK(a.coeff(RootSubset::from_indices(2, {1})) == -1);

    for (int d = 2; d <= 5; ++d)
        for (const RootSubset& I : strict_subsets(d))
            if (I.size() == d - 1) {
                const IBasisClass x = class_pi_in_i(I);
                CHECK(x.coeffs.size() == 1);
                CHECK(x.coeff(I) == 1);
            }

    const IBasisClass b = class_pi_in_i(RootSubset::from_indices(3, {1, 2}));
    CHECK(b.coeffs.size() == 1);
    CHECK(b.coeff(RootSubset::from_indices(3, {1, 2})) == 1);
}

TEST_CASE("Moebius round trip recovers the unit vector") {
    for (int d = 1; d <= 6; ++d)
        for (const RootSubset& I : strict_subsets(d))
            CHECK(expand_in_pi(class_pi_in_i(I)) == unit(I));
}

TEST_CASE("class_v: direct description") {
    PiBasisClass e2(2);
    e2.add(RootSubset::empty_set(2), 1);
    e2.add(RootSubset::from_indices(2, {0}), 1);
    CHECK(class_v(RootSubset::empty_set(2)) == e2);

    CHECK(class_v(RootSubset::from_indices(2, {1})) == unit(RootSubset::from_indices(2, {1})));

    PiBasisClass e3(3);
    e3.add(RootSubset::from_indices(3, {2}), 1);
    e3.add(RootSubset::from_indices(3, {0, 2}), 1);
    CHECK(class_v(RootSubset::from_indices(3, {2})) == e3);

    CHECK_THROWS_AS(class_v(RootSubset::from_indices(3, {0})), std::invalid_argument);
}

TEST_CASE("class_v agrees with the alternating sum over the complex") {
    for (int d = 1; d <= 6; ++d)
        for (const RootSubset& I : classical_subsets(d))
            CHECK(class_v(I) == class_v_via_complex(I));
}

TEST_CASE("class_hbar and its top edge") {
    PiBasisClass h0(2);
    h0.add(RootSubset::empty_set(2), 1);
    h0.add(RootSubset::from_indices(2, {0}), 1);
    CHECK(class_hbar(2, 0) == h0);

    CHECK(class_hbar(2, 1) == unit(RootSubset::from_indices(2, {1})));
    CHECK(class_hbar(4, 3) == unit(RootSubset::from_indices(4, {1, 2, 3})));
    CHECK_THROWS_AS(class_hbar(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(class_hbar(3, -1), std::invalid_argument);
}

TEST_CASE("twist_class permutes the basis") {
    CHECK(twist_class(unit(RootSubset::from_indices(2, {1})), 1) ==
          unit(RootSubset::from_indices(2, {0})));
    for (int d = 2; d <= 6; ++d) {
        const PiBasisClass full = class_i(RootSubset::empty_set(d));
        for (int k = 0; k < d; ++k) CHECK(twist_class(full, k) == full);
        for (const RootSubset& I : strict_subsets(d))
            CHECK(twist_class(unit(I), d) == unit(I));
    }
}

TEST_CASE("decomposition matrix shape and unit entries") {
    const DecompositionMatrix m1 = decomposition_matrix(1);
    CHECK(m1.rows.size() == 1);
    CHECK(m1.columns.size() == 1);
    CHECK(m1.entries[0][0] == 1);

    const DecompositionMatrix m2 = decomposition_matrix(2);
    CHECK(m2.rows.size() == 2);
    CHECK(m2.columns.size() == 3);
    // basis order: {}, {0}, {1}
    CHECK(m2.entries[0] == std::vector<long long>{1, 1, 0});
    CHECK(m2.entries[1] == std::vector<long long>{0, 0, 1});

    for (int d = 1; d <= 7; ++d) {
        const DecompositionMatrix m = decomposition_matrix(d);
        CHECK(m.rows.size() == (1u << (d - 1)));
        CHECK(m.columns.size() == (1u << d) - 1);
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            int units = 0;
            for (std::size_t c = 0; c < m.columns.size(); ++c) {
                const long long e = m.entries[r][c];
                CHECK((e == 0 || e == 1));
                if (e == 1) {
                    ++units;
                    const bool same = m.columns[c] == m.rows[r];
                    const bool with0 = m.columns[c] == m.rows[r].with(0);
                    CHECK((same || with0));
                }
            }
            const bool is_full_classical = m.rows[r] == RootSubset::classical_full(d);
            CHECK(units == (is_full_classical ? 1 : 2));
        }
    }
}
