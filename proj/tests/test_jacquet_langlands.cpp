#include <doctest.h>

#include <stdexcept>

#include "coxblock/jacquet_langlands.hpp"

using namespace coxblock;

TEST_CASE("lj: sign and support") {
    DVirtualClass a(3);
    a.coeffs = {-1, 0, -1};
    CHECK(lj(RootSubset::from_indices(3, {1})) == a);

    for (int d = 1; d <= 6; ++d) {
        DVirtualClass all(d);
        for (int j = 0; j < d; ++j) all.coeffs[j] = 1;
        CHECK(lj(RootSubset::empty_set(d)) == all);
    }

    DVirtualClass b(2);
    b.coeffs = {-1, 0};
    CHECK(lj(RootSubset::from_indices(2, {1})) == b);

    CHECK_THROWS_AS(lj(RootSubset::affine_full(3)), std::invalid_argument);

    for (int d = 1; d <= 7; ++d)
        for (const RootSubset& I : strict_subsets(d)) {
            const DVirtualClass v = lj(I);
            CHECK(!v.is_zero());
            const long long sign = (I.size() % 2 == 0) ? 1 : -1;
            for (int j = 0; j < d; ++j)
                CHECK(v.coeffs[j] == (I.contains(j) ? 0 : sign));
        }
}

TEST_CASE("lj_effective") {
    CHECK(lj_effective(RootSubset::from_indices(3, {1})) ==
          LJEffective{-1, RootSubset::from_indices(3, {0, 2})});
    CHECK(lj_effective(RootSubset::from_indices(4, {1, 3})) ==
          LJEffective{1, RootSubset::from_indices(4, {0, 2})});
    CHECK(lj_effective(RootSubset::empty_set(1)) ==
          LJEffective{1, RootSubset::from_indices(1, {0})});
}

TEST_CASE("lj_linear kills properly induced classes") {
    for (int d = 1; d <= 7; ++d) {
        for (const RootSubset& I : strict_subsets(d)) {
            const DVirtualClass v = lj_linear(class_i(I));
            if (I.size() <= d - 2) {
                CHECK(v.is_zero());
            } else {
                // i_I with |I| = d-1 is the character pi_I itself
                CHECK(v == lj(I));
            }
        }
        // the non-proper case I = S
        DVirtualClass top(d);
        top.coeffs[0] = (d % 2 == 0) ? -1 : 1;   // (-1)^{d-1}
        CHECK(lj_linear(class_i(RootSubset::classical_full(d))) == top);
        CHECK(lj_linear(PiBasisClass(d)).is_zero());
    }
}

TEST_CASE("lj commutes with the Coxeter rotation") {
    for (int d = 1; d <= 6; ++d)
        for (const RootSubset& I : strict_subsets(d))
            for (int k = 0; k < d; ++k)
                CHECK(lj(coxeter_shift(I, k)) == lj(I).rotated(k));
}
