#include "coxblock/weil_deligne.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxblock {

namespace {

int mod_d(int a, int d) {
    a %= d;
    return a < 0 ? a + d : a;
}

void canonicalize(std::vector<WDString>& strings) {
    std::sort(strings.begin(), strings.end(), [](const WDString& a, const WDString& b) {
        if (a.length != b.length) return a.length > b.length;
        return a.top < b.top;
    });
}

// index of the line where the operator's action along the string ends
int terminal_index(const WDString& s, WDDirection dir, int d) {
    return dir == WDDirection::L ? mod_d(s.top - s.length + 1, d) : mod_d(s.top, d);
}

}  // namespace

WDObject::WDObject(int rank, WDDirection dir, std::vector<WDString> s)
    : d(rank), direction(dir), strings(std::move(s)) {
    if (d < 1 || d > kMaxRank) throw std::invalid_argument("WDObject: rank out of range");
    for (WDString& str : strings) {
        if (str.length < 1 || str.length > d)
            throw std::invalid_argument("WDObject: string length must lie in [1, d]");
        str.top = mod_d(str.top, d);
    }
    canonicalize(strings);
}

int WDObject::dim() const {
    int n = 0;
    for (const WDString& s : strings) n += s.length;
    return n;
}

std::map<int, int> WDObject::lines() const {
    std::map<int, int> out;
    for (const WDString& s : strings)
        for (int c = 0; c < s.length; ++c) ++out[mod_d(s.top - c, d)];
    return out;
}

WDObject wd_elliptic(const RootSubset& I) {
    if (!I.is_strict())
        throw std::invalid_argument("wd_elliptic: the full affine set indexes no object");
    const int d = I.rank();
    std::vector<WDString> strings;
    int gap = 0;
    while (I.contains(gap)) ++gap;
    int run = 0;
    for (int step = 1; step <= d; ++step) {
        const int pos = gap + step;
        if (I.contains(pos)) {
            ++run;
        } else {
            if (run > 0) strings.push_back({mod_d(pos - 1, d), run + 1});
            run = 0;
            // pos itself is a singleton unless it hangs below a run
            if (!I.contains(pos + 1)) strings.push_back({mod_d(pos, d), 1});
        }
    }
    return {d, WDDirection::L, std::move(strings)};
}

Partition jordan_type(const WDObject& x) {
    std::vector<int> parts;
    parts.reserve(x.strings.size());
    for (const WDString& s : x.strings) parts.push_back(s.length);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(parts);
}

PrimitiveParts deligne_primitive_parts(const WDObject& x) {
    PrimitiveParts parts;
    for (const WDString& s : x.strings) {
        const int n = s.length - 1;
        if (static_cast<int>(parts.size()) <= n) parts.resize(n + 1);
        ++parts[n][terminal_index(s, x.direction, x.d)];
    }
    return parts;
}

WDObject wd_from_primitive_parts(int d, WDDirection dir, const PrimitiveParts& parts) {
    std::vector<WDString> strings;
    for (int n = 0; n < static_cast<int>(parts.size()); ++n) {
        for (auto [pos, mult] : parts[n]) {
            if (mult < 0) throw std::invalid_argument("primitive multiplicities must be >= 0");
            const int top = dir == WDDirection::L ? mod_d(pos + n, d) : mod_d(pos, d);
            for (int m = 0; m < mult; ++m) strings.push_back({top, n + 1});
        }
    }
    return {d, dir, std::move(strings)};
}

WDObject transpose_wd(const WDObject& x) {
    WDObject out = x;
    out.direction = x.direction == WDDirection::L ? WDDirection::N : WDDirection::L;
    return out;
}

WDObject twist_wd(const WDObject& x, int k) {
    std::vector<WDString> strings = x.strings;
    for (WDString& s : strings) s.top = mod_d(s.top + k, x.d);
    return {x.d, x.direction, std::move(strings)};
}

WDMatrix wd_operator_matrix(const WDObject& x) {
    const int n = x.dim();
    WDMatrix m;
    m.entries.assign(n, std::vector<long long>(n, 0));
    m.labels.resize(n);
    const int step = x.direction == WDDirection::L ? -1 : +1;
    int cell = 0;
    for (const WDString& s : x.strings) {
        const int start = x.direction == WDDirection::L ? s.top : mod_d(s.top - s.length + 1, x.d);
        for (int c = 0; c < s.length; ++c) {
            m.labels[cell + c] = mod_d(start + step * c, x.d);
            if (c + 1 < s.length) m.entries[cell + c + 1][cell + c] = 1;
        }
        cell += s.length;
    }
    return m;
}

std::string to_string(WDDirection dir) { return dir == WDDirection::L ? "L" : "N"; }

}  // namespace coxblock
