#include "coxblock/serialize.hpp"

#include <stdexcept>

namespace coxblock {

json to_json(const RootSubset& I) { return json(I.indices()); }

RootSubset subset_from_json(int d, const json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        const long long bits = j.get<long long>();
        if (bits < 0) throw std::invalid_argument("subset bitmask must be >= 0");
        return {d, static_cast<std::uint32_t>(bits)};
    }
    if (j.is_array()) return RootSubset::from_indices(d, j.get<std::vector<int>>());
    if (j.is_string()) return parse_subset(d, j.get<std::string>());
    throw std::invalid_argument("subset must be a bitmask, an index array, or a string");
}

RootSubset parse_subset(int d, const std::string& text) {
    std::string t = text;
    bool list = false;
    if (!t.empty() && t.front() == '[') {
        if (t.back() != ']') throw std::invalid_argument("unterminated subset list");
        t = t.substr(1, t.size() - 2);
        list = true;
    }
    if (t.find(',') != std::string::npos) list = true;
    if (t.empty()) return RootSubset::empty_set(d);
    if (!list) {
        std::size_t pos = 0;
        const long long bits = std::stoll(t, &pos);
        if (pos != t.size() || bits < 0) throw std::invalid_argument("bad subset bitmask: " + text);
        return {d, static_cast<std::uint32_t>(bits)};
    }
    std::vector<int> indices;
    std::size_t start = 0;
    while (start <= t.size()) {
        const std::size_t comma = t.find(',', start);
        const std::string item = t.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!item.empty()) {
            std::size_t pos = 0;
            indices.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("bad subset index: " + item);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return RootSubset::from_indices(d, indices);
}

json to_json(const Partition& p) { return json(p.parts); }

json to_json(const WDObject& x) {
    json strings = json::array();
    for (const WDString& s : x.strings) strings.push_back({{"top", s.top}, {"len", s.length}});
    return {{"d", x.d}, {"direction", to_string(x.direction)}, {"strings", strings}};
}

WDObject wd_from_json(const json& j) {
    const int d = j.at("d").get<int>();
    const std::string dir = j.at("direction").get<std::string>();
    if (dir != "L" && dir != "N") throw std::invalid_argument("direction must be \"L\" or \"N\"");
    std::vector<WDString> strings;
    for (const json& s : j.at("strings"))
        strings.push_back({s.at("top").get<int>(), s.at("len").get<int>()});
    return {d, dir == "L" ? WDDirection::L : WDDirection::N, std::move(strings)};
}

json to_json(const SSPair& s) {
    json out = json::array();
    for (const auto& [j, wd] : s.entries) out.push_back(json::array({j, to_json(wd)}));
    return out;
}

json to_json(const BiGradedR& r) {
    json cells = json::array();
    for (const auto& [key, dim] : r.dims) {
        const auto [n, i, j] = key;
        cells.push_back({{"deg", n}, {"i", i}, {"j", j}, {"dim", dim}});
    }
    json isos = json::array();
    for (const IsoComponent& c : r.lefschetz)
        isos.push_back({{"deg", c.degree}, {"i", c.i}, {"j", c.j}});
    return {{"d", r.d}, {"cells", cells}, {"lefschetz", isos}};
}

json to_json(const DVirtualClass& v) { return json(v.coeffs); }

json to_json(const PiBasisClass& x) {
    json out = json::array();
    for (const RootSubset& I : strict_subsets(x.d)) {
        const long long c = x.coeff(I);
        if (c != 0) out.push_back(json::array({to_json(I), c}));
    }
    return out;
}

json to_json(const PoincarePolynomial& p) {
    json out = json::array();
    for (auto [deg, c] : p.coeffs) out.push_back(json::array({deg, c}));
    return out;
}

json to_json(const E1Page& page) {
    json cells = json::array();
    for (const auto& [pq, dim] : page.cells)
        cells.push_back(json::array({pq.first, pq.second, dim}));
    return {{"d", page.d},
            {"I", to_json(page.I)},
            {"i", page.i},
            {"cells", cells}};
}

json to_json(const DecompositionMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        rows.push_back({{"bitmask", m.rows[r].bits()},
                        {"indices", to_json(m.rows[r])},
                        {"entries", m.entries[r]}});
    json cols = json::array();
    for (const RootSubset& J : m.columns)
        cols.push_back({{"bitmask", J.bits()}, {"indices", to_json(J)}});
    return {{"d", m.d}, {"columns", cols}, {"rows", rows}};
}

json to_json(const VerifyReport& r) {
    return {{"I_bitmask", r.I.bits()},
            {"I", to_json(r.I)},
            {"ok", r.ok},
            {"lhs", to_json(r.lhs)},
            {"rhs", to_json(r.rhs)}};
}

json to_json(const LadicEntry& e) {
    json out = {{"degree", e.degree},
                {"class", e.subset},
                {"tate_twist", e.tate_twist},
                {"induction_factor", true},
                {"cuspidal_kernel", e.cuspidal_kernel}};
    return out;
}

json to_json(const Params& p) {
    return {{"q", p.q}, {"ell", p.ell}, {"d", p.d}, {"coxeter", p.coxeter}};
}

}  // namespace coxblock
