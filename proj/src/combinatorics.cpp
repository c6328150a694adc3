#include "coxblock/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace coxblock {

namespace {

void check_rank(int d) {
    if (d < 1 || d > kMaxRank)
        throw std::invalid_argument("rank d must satisfy 1 <= d <= " + std::to_string(kMaxRank));
}

std::uint32_t full_mask(int d) { return (d == 32) ? ~0u : ((1u << d) - 1u); }

void check_same_rank(const RootSubset& a, int d) {
    if (a.rank() != d)
        throw std::invalid_argument("rank mismatch between subsets");
}

}  // namespace

RootSubset::RootSubset(int d, std::uint32_t bits) : d_(d), bits_(bits) {
    check_rank(d);
    if (bits & ~full_mask(d))
        throw std::invalid_argument("subset bitmask has bits outside {0,...,d-1}");
}

RootSubset RootSubset::classical_full(int d) {
    check_rank(d);
    return {d, full_mask(d) & ~1u};
}

RootSubset RootSubset::affine_full(int d) {
    check_rank(d);
    return {d, full_mask(d)};
}

RootSubset RootSubset::from_indices(int d, const std::vector<int>& indices) {
    check_rank(d);
    std::uint32_t bits = 0;
    for (int k : indices) {
        if (k < 0 || k >= d)
            throw std::invalid_argument("subset index out of range [0, d)");
        bits |= (1u << k);
    }
    return {d, bits};
}

int RootSubset::size() const { return std::popcount(bits_); }

bool RootSubset::contains(int k) const {
    k %= d_;
    if (k < 0) k += d_;
    return (bits_ >> k) & 1u;
}

bool RootSubset::is_strict() const { return bits_ != full_mask(d_); }

RootSubset RootSubset::shifted(int k) const {
    k %= d_;
    if (k < 0) k += d_;
    if (k == 0) return *this;
    const std::uint32_t m = full_mask(d_);
    const std::uint32_t rotated = ((bits_ << k) | (bits_ >> (d_ - k))) & m;
    return {d_, rotated};
}

RootSubset RootSubset::with(int k) const {
    if (k < 0 || k >= d_) throw std::invalid_argument("subset index out of range [0, d)");
    return {d_, bits_ | (1u << k)};
}

RootSubset RootSubset::complement() const { return {d_, full_mask(d_) & ~bits_}; }

std::vector<int> RootSubset::indices() const {
    std::vector<int> out;
    for (int k = 0; k < d_; ++k)
        if ((bits_ >> k) & 1u) out.push_back(k);
    return out;
}

std::string RootSubset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int k : indices()) {
        if (!first) s += ",";
        s += std::to_string(k);
        first = false;
    }
    return s + "}";
}

std::strong_ordering RootSubset::operator<=>(const RootSubset& o) const {
    if (auto c = d_ <=> o.d_; c != 0) return c;
    if (auto c = size() <=> o.size(); c != 0) return c;
    return bits_ <=> o.bits_;
}

std::vector<RootSubset> strict_subsets(int d) {
    check_rank(d);
    std::vector<RootSubset> out;
    out.reserve((1u << d) - 1);
    for (std::uint32_t b = 0; b < full_mask(d); ++b) out.emplace_back(d, b);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RootSubset> classical_subsets(int d) {
    check_rank(d);
    std::vector<RootSubset> out;
    const std::uint32_t sm = RootSubset::classical_full(d).bits();
    for (std::uint32_t b = 0;; b = (b - sm) & sm) {   // iterate sub-masks of sm
        out.emplace_back(d, b);
        if (b == sm) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Permutation Permutation::identity(int d) {
    check_rank(d);
    Permutation w{d, std::vector<int>(d)};
    std::iota(w.images.begin(), w.images.end(), 0);
    return w;
}

Permutation Permutation::coxeter(int d) {
    Permutation w = identity(d);
    for (int k = 0; k < d; ++k) w.images[k] = (k + 1) % d;
    return w;
}

Permutation Permutation::compose(const Permutation& v) const {
    if (d != v.d) throw std::invalid_argument("rank mismatch between permutations");
    Permutation out{d, std::vector<int>(d)};
    for (int k = 0; k < d; ++k) out.images[k] = images[v.images[k]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out{d, std::vector<int>(d)};
    for (int k = 0; k < d; ++k) out.images[images[k]] = k;
    return out;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t m = 0; m < parts.size(); ++m) {
        if (parts[m] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (m > 0 && parts[m] > parts[m - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::transpose() const {
    if (parts.empty()) return {};
    std::vector<int> out(parts[0], 0);
    for (int p : parts)
        for (int k = 0; k < p; ++k) ++out[k];
    return Partition(out);
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t m = 0; m < parts.size(); ++m) {
        if (m) s += ",";
        s += std::to_string(parts[m]);
    }
    return s;
}

RootSubset coxeter_shift(const RootSubset& I, int k) { return I.shifted(k); }

Partition levi_partition(const RootSubset& I) {
    if (!I.is_strict())
        throw std::invalid_argument("levi_partition: no Levi class for the full affine set");
    const int d = I.rank();
    std::vector<int> parts;
    int members = 0;
    // start the cyclic walk just past some gap, so runs never straddle the seam
    int gap = 0;
    while (I.contains(gap)) ++gap;
    int run = 0;
    for (int step = 1; step <= d; ++step) {
        if (I.contains(gap + step)) {
            ++run;
            ++members;
        } else if (run > 0) {
            parts.push_back(run + 1);
            run = 0;
        }
    }
    const int singles = d - members - static_cast<int>(parts.size());
    parts.insert(parts.end(), singles, 1);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(parts);
}

Partition whittaker_partition(const RootSubset& I) {
    if (!I.is_strict())
        throw std::invalid_argument("whittaker_partition: undefined for the full affine set");
    const int d = I.rank();
    std::vector<int> counts(d + 1, 0);
    for (int a = 0; a < d; ++a) {
        int depth = 0;
        while (depth < d && I.contains(a - depth)) ++depth;
        ++counts[depth];
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return Partition(counts);
}

std::pair<RootSubset, RootSubset> descents(const Permutation& w) {
    const int d = w.d;
    std::uint32_t affine = 0;
    for (int j = 0; j < d; ++j)
        if (w.images[(j - 1 + d) % d] < w.images[j]) affine |= (1u << j);
    return {RootSubset(d, affine & ~1u), RootSubset(d, affine)};
}

int partial(const RootSubset& I, int k) {
    if (!I.is_classical())
        throw std::invalid_argument("partial: requires a classical subset (0 not a member)");
    const int d = I.rank();
    k %= d;
    if (k < 0) k += d;
    const std::uint32_t upto_k = ((k == 0) ? 0u : ((1u << (k + 1)) - 1u)) & ~1u;  // {1,...,k}
    const int delta = std::popcount(I.bits() | upto_k) - std::popcount(I.bits() & upto_k);
    return k - delta;
}

std::vector<TorusCharacter> jacquet_module(JacquetKind kind, const RootSubset& I) {
    const int d = I.rank();
    if (kind == JacquetKind::pi && !I.is_strict())
        throw std::invalid_argument("jacquet_module: kind pi requires a strict subset");
    if (kind == JacquetKind::v && !I.is_classical())
        throw std::invalid_argument("jacquet_module: kind v requires a classical subset");
    if (kind == JacquetKind::pi && I.empty()) return {};   // cuspidal
    if (d > kMaxEnumRank)
        throw std::invalid_argument("jacquet_module: symmetric-group enumeration gated at d <= " +
                                    std::to_string(kMaxEnumRank));

    std::vector<TorusCharacter> out;
    std::vector<int> images(d);
    std::iota(images.begin(), images.end(), 0);
    do {
        std::uint32_t affine = 0;
        for (int j = 0; j < d; ++j)
            if (images[(j - 1 + d) % d] < images[j]) affine |= (1u << j);
        const std::uint32_t want = (kind == JacquetKind::pi) ? affine : (affine & ~1u);
        if (want == I.bits()) out.push_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    std::sort(out.begin(), out.end());
    return out;
}

RootSubset j_corner(int i, const RootSubset& I) {
    if (!I.is_classical())
        throw std::invalid_argument("j_corner: requires a classical subset");
    const int d = I.rank();
    if (i < 0 || i >= d) throw std::invalid_argument("j_corner: index out of range [0, d)");
    std::uint32_t bits = I.bits();
    for (int k = i + 1; k < d; ++k) bits |= (1u << k);
    return {d, bits};
}

TorusCharacter delta_character(int d) {
    check_rank(d);
    TorusCharacter e(d);
    std::iota(e.begin(), e.end(), 0);
    return e;
}

}  // namespace coxblock
