#include "coxblock/cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coxblock {

namespace {

int mod_d(int a, int d) {
    a %= d;
    return a < 0 ? a + d : a;
}

void require_strict(const RootSubset& I, const char* who) {
    if (!I.is_strict())
        throw std::invalid_argument(std::string(who) + ": the full affine set indexes no class");
}

// degree of the unique nonzero cell in column j at Frobenius index i
int cell_degree(const RootSubset& I, int i, int j) {
    const RootSubset shifted = I.shifted(-j);   // classical since j is not in I
    return -partial(shifted, i - j);
}

bool pair_less(const std::pair<int, WDObject>& a, const std::pair<int, WDObject>& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second.d != b.second.d) return a.second.d < b.second.d;
    if (a.second.direction != b.second.direction) return a.second.direction < b.second.direction;
    return std::lexicographical_compare(
        a.second.strings.begin(), a.second.strings.end(),
        b.second.strings.begin(), b.second.strings.end(),
        [](const WDString& x, const WDString& y) {
            return std::pair(-x.length, x.top) < std::pair(-y.length, y.top);
        });
}

}  // namespace

int BiGradedR::total_dim() const {
    int n = 0;
    for (const auto& [key, dim] : dims) n += dim;
    return n;
}

void SSPair::canonicalize() { std::sort(entries.begin(), entries.end(), pair_less); }

BiGradedR r_star(const RootSubset& I) {
    require_strict(I, "r_star");
    const int d = I.rank();
    BiGradedR out;
    out.d = d;
    for (int j = 0; j < d; ++j) {
        if (I.contains(j)) continue;   // vanishing column
        for (int i = 0; i < d; ++i)
            out.dims[{cell_degree(I, i, j), i, j}] = 1;
    }
    out.lefschetz = lefschetz(I);
    return out;
}

std::vector<IsoComponent> lefschetz(const RootSubset& I) {
    require_strict(I, "lefschetz");
    const int d = I.rank();
    std::vector<IsoComponent> out;
    for (int j = 0; j < d; ++j) {
        if (I.contains(j)) continue;
        for (int i = 0; i < d; ++i) {
            if (!I.contains(i)) continue;
            const int n = cell_degree(I, i, j);
            // target cell one Frobenius step down must sit two degrees up
            if (cell_degree(I, mod_d(i - 1, d), j) != n + 2)
                throw std::logic_error("lefschetz: degree step is not 2 on a member index");
            out.push_back({n, i, j});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SSPair semisimplify_lhs(const RootSubset& I) {
    require_strict(I, "semisimplify_lhs");
    const BiGradedR table = r_star(I);
    const int d = table.d;

    // column -> set of Frobenius indices carrying an iso component
    std::vector<std::set<int>> edges(d);
    for (const IsoComponent& c : table.lefschetz) edges[c.j].insert(c.i);

    // column -> line indices present (each cell is one-dimensional)
    std::vector<std::set<int>> lines(d);
    for (const auto& [key, dim] : table.dims) {
        const auto [n, i, j] = key;
        if (dim != 1) throw std::logic_error("semisimplify_lhs: expected one-dimensional cells");
        if (!lines[j].insert(i).second)
            throw std::logic_error("semisimplify_lhs: two degrees share one (i,j) cell");
    }

    SSPair out;
    out.d = d;
    for (int j = 0; j < d; ++j) {
        if (lines[j].empty()) continue;
        if (edges[j].size() >= lines[j].size())
            throw std::logic_error("semisimplify_lhs: operator chain covers a whole column");
        std::vector<WDString> strings;
        for (int top : lines[j]) {
            if (edges[j].count(mod_d(top + 1, d))) continue;   // interior of a chain
            int len = 1;
            int cur = top;
            while (edges[j].count(cur)) {
                cur = mod_d(cur - 1, d);
                ++len;
            }
            strings.push_back({top, len});
        }
        out.entries.emplace_back(j, WDObject(d, WDDirection::L, std::move(strings)));
    }
    out.canonicalize();
    return out;
}

SSPair rhs(const RootSubset& I) {
    require_strict(I, "rhs");
    const LJEffective eff = lj_effective(I);
    const WDObject wd = wd_elliptic(I);
    SSPair out;
    out.d = I.rank();
    for (int j : eff.chars.indices()) out.entries.emplace_back(j, wd);
    out.canonicalize();
    return out;
}

VerifyReport verify_main_theorem(const RootSubset& I) {
    VerifyReport report{I, false, semisimplify_lhs(I), rhs(I)};
    report.ok = (report.lhs == report.rhs);
    return report;
}

bool twist_equivariance_check(const RootSubset& I, int k) {
    if (!I.is_strict()) return false;
    const int d = I.rank();
    const BiGradedR base = r_star(I);
    const BiGradedR twisted = r_star(I.shifted(k));

    BiGradedR expected;
    expected.d = d;
    for (const auto& [key, dim] : base.dims) {
        const auto [n, i, j] = key;
        expected.dims[{n, mod_d(i + k, d), mod_d(j + k, d)}] = dim;
    }
    for (const IsoComponent& c : base.lefschetz)
        expected.lefschetz.push_back({c.degree, mod_d(c.i + k, d), mod_d(c.j + k, d)});
    std::sort(expected.lefschetz.begin(), expected.lefschetz.end());
    return twisted == expected;
}

std::vector<LadicEntry> ladic_cohomology(int d) {
    if (d < 1 || d > kMaxRank) throw std::invalid_argument("ladic_cohomology: rank out of range");
    std::vector<LadicEntry> out;
    out.push_back({d - 1, {}, 0, true});
    for (int i = 1; i <= d - 1; ++i) {
        std::vector<int> subset;
        for (int k = 1; k <= i; ++k) subset.push_back(k);
        out.push_back({d - 1 + i, std::move(subset), -i, false});
    }
    return out;
}

BiGradedR non_elliptic_r_star(int d) {
    if (d < 1 || d > kMaxRank) throw std::invalid_argument("non_elliptic_r_star: rank out of range");
    BiGradedR out;
    out.d = d;
    return out;
}

}  // namespace coxblock
