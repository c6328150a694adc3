#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "coxblock/combinatorics.hpp"

using namespace coxblock;

namespace {

std::vector<Permutation> all_permutations(int d) {
    std::vector<Permutation> out;
    std::vector<int> images(d);
    std::iota(images.begin(), images.end(), 0);
    do {
        out.push_back(Permutation{d, images});
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace

TEST_CASE("coxeter_shift rotates indices mod d") {
    CHECK(coxeter_shift(RootSubset::from_indices(4, {1, 3}), 1) ==
          RootSubset::from_indices(4, {0, 2}));
    CHECK(coxeter_shift(RootSubset::empty_set(3), 2) == RootSubset::empty_set(3));
    CHECK(coxeter_shift(RootSubset::from_indices(5, {0, 4}), 1) ==
          RootSubset::from_indices(5, {0, 1}));
    CHECK(coxeter_shift(RootSubset::from_indices(4, {1, 3}), -1) ==
          RootSubset::from_indices(4, {0, 2}));
}

TEST_CASE("coxeter_shift is a Z/dZ action preserving both partitions") {
    for (int d = 1; d <= 7; ++d) {
        for (const RootSubset& I : strict_subsets(d)) {
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b)
                    CHECK(coxeter_shift(coxeter_shift(I, a), b) == coxeter_shift(I, a + b));
                CHECK(coxeter_shift(I, d) == I);
                CHECK(levi_partition(coxeter_shift(I, a)) == levi_partition(I));
                CHECK(whittaker_partition(coxeter_shift(I, a)) == whittaker_partition(I));
            }
        }
    }
}

TEST_CASE("levi_partition from cyclic runs") {
    CHECK(levi_partition(RootSubset::from_indices(4, {1, 2})) == Partition({3, 1}));
    CHECK(levi_partition(RootSubset::empty_set(4)) == Partition({1, 1, 1, 1}));
    // wrap-around run {3,0,1}
    CHECK(levi_partition(RootSubset::from_indices(4, {0, 1, 3})) == Partition({4}));
    CHECK_THROWS_AS(levi_partition(RootSubset::affine_full(4)), std::invalid_argument);

    for (int d = 1; d <= 8; ++d)
        for (const RootSubset& I : strict_subsets(d)) {
            const Partition mu = levi_partition(I);
            CHECK(mu.weight() == d);
            CHECK(static_cast<int>(mu.parts.size()) == d - I.size());
        }
}

TEST_CASE("whittaker_partition is the transpose of levi_partition") {
    CHECK(whittaker_partition(RootSubset::from_indices(4, {1, 2})) == Partition({2, 1, 1}));
    for (int d = 1; d <= 8; ++d) {
        CHECK(whittaker_partition(RootSubset::empty_set(d)) == Partition({d}));
        for (const RootSubset& I : strict_subsets(d)) {
            if (I.size() == d - 1)
                CHECK(whittaker_partition(I) == Partition(std::vector<int>(d, 1)));
            CHECK(levi_partition(I).transpose() == whittaker_partition(I));
        }
    }
    CHECK_THROWS_AS(whittaker_partition(RootSubset::affine_full(3)), std::invalid_argument);
}

TEST_CASE("descent sets of small permutations") {
    const auto [c1, a1] = descents(Permutation::identity(3));
    CHECK(c1 == RootSubset::from_indices(3, {1, 2}));
    CHECK(a1 == RootSubset::from_indices(3, {1, 2}));

    const auto [c2, a2] = descents(Permutation::coxeter(3));
    CHECK(c2 == RootSubset::from_indices(3, {1}));
    CHECK(a2 == RootSubset::from_indices(3, {0, 1}));

    const auto [c3, a3] = descents(Permutation{2, {1, 0}});
    CHECK(c3 == RootSubset::empty_set(2));
    CHECK(a3 == RootSubset::from_indices(2, {0}));
}

TEST_CASE("classical and affine descent sets fit together") {
    for (int d = 2; d <= 6; ++d) {
        std::map<std::uint32_t, int> classical_count, affine_count;
        for (const Permutation& w : all_permutations(d)) {
            const auto [cl, af] = descents(w);
            CHECK(cl.bits() == (af.bits() & ~1u));
            CHECK(!af.empty());
            CHECK(af.is_strict());
            ++classical_count[cl.bits()];
            ++affine_count[af.bits()];
        }
        // {w : classical = I} splits as {affine = I} u {affine = I u {0}}
        for (const RootSubset& I : classical_subsets(d)) {
            int expected = 0;
            if (auto it = affine_count.find(I.bits()); it != affine_count.end())
                expected += it->second;
            if (auto it = affine_count.find(I.with(0).bits()); it != affine_count.end())
                expected += it->second;
            const auto found = classical_count.find(I.bits());
            CHECK((found == classical_count.end() ? 0 : found->second) == expected);
        }
        // every J with {} < J < S~ is hit, nothing else
        CHECK(affine_count.size() == (1u << d) - 2);
        for (const auto& [bits, count] : affine_count) {
            CHECK(bits != 0);
            CHECK(RootSubset(d, bits).is_strict());
            CHECK(count > 0);
        }
    }
}

TEST_CASE("partial: defining table and boundary cases") {
    const RootSubset I = RootSubset::from_indices(4, {1, 3});
    CHECK(partial(I, 0) == -2);
    CHECK(partial(I, 1) == 0);
    CHECK(partial(I, 2) == 0);
    CHECK(partial(I, 3) == 2);
    CHECK(partial(I, 4) == -2);    // d-periodic
    CHECK(partial(I, -1) == 2);

    for (int d = 2; d <= 6; ++d) {
        for (int k = 0; k < d; ++k) {
            CHECK(partial(RootSubset::empty_set(d), k) == 0);
            CHECK(partial(RootSubset::classical_full(d), k) == 1 - d + 2 * k);
        }
    }
    CHECK_THROWS_AS(partial(RootSubset::from_indices(3, {0}), 1), std::invalid_argument);
}

TEST_CASE("partial: image and fibers") {
    for (int d = 1; d <= 10; ++d) {
        for (const RootSubset& I : classical_subsets(d)) {
            std::vector<int> values;
            for (int k = 0; k < d; ++k) values.push_back(partial(I, k));
            CHECK(std::is_sorted(values.begin(), values.end()));

            const int m = I.size();
            std::set<int> image(values.begin(), values.end());
            std::set<int> expected;
            for (int j = 0; j <= m; ++j) expected.insert(-m + 2 * j);
            CHECK(image == expected);

            // fiber of -|I|+2j is {i_j, ..., i_{j+1}-1} with i_0 = 0, i_{m+1} = d
            std::vector<int> anchors = I.indices();
            anchors.insert(anchors.begin(), 0);
            anchors.push_back(d);
            for (int j = 0; j <= m; ++j)
                for (int k = anchors[j]; k < anchors[j + 1]; ++k)
                    CHECK(values[k] == -m + 2 * j);

            for (int k = 1; k < d; ++k)
                CHECK(values[k] - values[k - 1] == (I.contains(k) ? 2 : 0));
        }
    }
}

TEST_CASE("jacquet_module boundary and small enumerations") {
    CHECK(jacquet_module(JacquetKind::pi, RootSubset::empty_set(4)).empty());
    CHECK(jacquet_module(JacquetKind::pi, RootSubset::empty_set(1)).empty());

    const auto pi1 = jacquet_module(JacquetKind::pi, RootSubset::from_indices(2, {1}));
    CHECK(pi1 == std::vector<TorusCharacter>{{0, 1}});

    const auto v0 = jacquet_module(JacquetKind::v, RootSubset::empty_set(2));
    CHECK(v0 == std::vector<TorusCharacter>{{1, 0}});

    CHECK_THROWS_AS(jacquet_module(JacquetKind::pi, RootSubset::affine_full(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(jacquet_module(JacquetKind::v, RootSubset::from_indices(2, {0})),
                    std::invalid_argument);
}

TEST_CASE("jacquet_module: v-terms split into the two pi-terms") {
    for (int d = 2; d <= 5; ++d) {
        for (const RootSubset& I : classical_subsets(d)) {
            if (I == RootSubset::classical_full(d)) continue;
            auto left = jacquet_module(JacquetKind::v, I);
            auto a = jacquet_module(JacquetKind::pi, I);
            auto b = jacquet_module(JacquetKind::pi, I.with(0));
            a.insert(a.end(), b.begin(), b.end());
            std::sort(a.begin(), a.end());
            CHECK(left == a);
        }
    }
}

TEST_CASE("j_corner unions the tail range") {
    CHECK(j_corner(2, RootSubset::from_indices(4, {1})) == RootSubset::from_indices(4, {1, 3}));
    CHECK(j_corner(0, RootSubset::empty_set(4)) == RootSubset::classical_full(4));
    CHECK(j_corner(3, RootSubset::from_indices(4, {2})) == RootSubset::from_indices(4, {2}));
    CHECK_THROWS_AS(j_corner(1, RootSubset::from_indices(4, {0})), std::invalid_argument);
}

TEST_CASE("delta exponents are pairwise distinct mod d") {
    for (int d = 1; d <= 10; ++d) {
        const TorusCharacter delta = delta_character(d);
        std::set<int> seen;
        for (int e : delta) CHECK(seen.insert(((e % d) + d) % d).second);
    }
}

TEST_CASE("rank mismatch and bounds are rejected") {
    CHECK_THROWS_AS(RootSubset::from_indices(3, {3}), std::invalid_argument);
    CHECK_THROWS_AS(RootSubset(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(RootSubset(3, 0b1000), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
}
