// coxblock: batch CLI for the unipotent-block combinatorics of GL_d under
// the Coxeter congruence.  Data goes to stdout, diagnostics to stderr;
// stdout is byte-deterministic for fixed arguments.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coxblock/serialize.hpp"

using namespace coxblock;

namespace {

constexpr int kDefaultEnumCap = 16;

int enumeration_cap() {
    if (const char* env = std::getenv("COXBLOCK_MAX_D")) {
        try {
            const int v = std::stoi(env);
            return std::min(std::max(v, 1), kMaxRank);
        } catch (const std::exception&) {
            std::cerr << "coxblock: ignoring unparsable COXBLOCK_MAX_D\n";
        }
    }
    return kDefaultEnumCap;
}

void check_enum_rank(int d) {
    const int cap = enumeration_cap();
    if (d < 1 || d > cap)
        throw std::invalid_argument("this command enumerates all subsets; need 1 <= d <= " +
                                    std::to_string(cap) + " (override with COXBLOCK_MAX_D)");
}

std::string join(const std::vector<int>& v) {
    if (v.empty()) return "-";
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_args_tsv(const std::vector<std::pair<std::string, std::string>>& args) {
    for (const auto& [key, value] : args) std::cout << "# " << key << "\t" << value << "\n";
}

struct ClassifyRow {
    RootSubset I;
    Partition levi;
    Partition whittaker;
    int lj_sign;
    std::vector<int> lj_support;
    Partition jordan;
};

int cmd_classify(int d, const std::string& format) {
    check_enum_rank(d);
    std::vector<ClassifyRow> rows;
    for (const RootSubset& I : strict_subsets(d)) {
        const LJEffective eff = lj_effective(I);
        rows.push_back({I, levi_partition(I), whittaker_partition(I), eff.sign,
                        eff.chars.indices(), jordan_type(wd_elliptic(I))});
    }
    if (format == "json") {
        json out = {{"d", d}, {"rows", json::array()}};
        for (const ClassifyRow& r : rows)
            out["rows"].push_back({{"I_bitmask", r.I.bits()},
                                   {"I", to_json(r.I)},
                                   {"levi", to_json(r.levi)},
                                   {"whittaker", to_json(r.whittaker)},
                                   {"lj_sign", r.lj_sign},
                                   {"lj_support", r.lj_support},
                                   {"jordan", to_json(r.jordan)}});
        emit_json(out);
    } else {
        emit_args_tsv({{"d", std::to_string(d)}});
        std::cout << "# I_bitmask\tI\tlevi\twhittaker\tlj_sign\tlj_support\tjordan\n";
        for (const ClassifyRow& r : rows)
            std::cout << r.I.bits() << "\t" << join(r.I.indices()) << "\t" << r.levi.to_string()
                      << "\t" << r.whittaker.to_string() << "\t" << (r.lj_sign > 0 ? "+1" : "-1")
                      << "\t" << join(r.lj_support) << "\t" << r.jordan.to_string() << "\n";
    }
    return 0;
}

int cmd_decomp(int d, const std::string& format) {
    check_enum_rank(d);
    const DecompositionMatrix m = decomposition_matrix(d);
    if (format == "json") {
        emit_json(to_json(m));
    } else {
        emit_args_tsv({{"d", std::to_string(d)}});
        std::cout << "# columns";
        for (const RootSubset& J : m.columns)
            std::cout << "\t" << J.bits() << ":" << join(J.indices());
        std::cout << "\n";
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            std::cout << m.rows[r].bits() << "\t" << join(m.rows[r].indices());
            for (long long e : m.entries[r]) std::cout << "\t" << e;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_lj(int d, const RootSubset& I, const std::string& format) {
    const LJEffective eff = lj_effective(I);
    const DVirtualClass cls = lj(I);
    if (format == "json") {
        emit_json({{"d", d},
                   {"I_bitmask", I.bits()},
                   {"I", to_json(I)},
                   {"sign", eff.sign},
                   {"support", eff.chars.indices()},
                   {"class", to_json(cls)}});
    } else {
        emit_args_tsv({{"d", std::to_string(d)}, {"I", join(I.indices())}});
        std::cout << "# sign\tsupport\tclass\n";
        std::cout << (eff.sign > 0 ? "+1" : "-1") << "\t" << join(eff.chars.indices()) << "\t";
        for (int j = 0; j < d; ++j) std::cout << (j ? "," : "") << cls.coeffs[j];
        std::cout << "\n";
    }
    return 0;
}

int cmd_wd(int d, const RootSubset& I, const std::string& format) {
    const WDObject x = wd_elliptic(I);
    if (format == "json") {
        emit_json(to_json(x));
    } else {
        emit_args_tsv({{"d", std::to_string(d)},
                       {"I", join(I.indices())},
                       {"direction", to_string(x.direction)}});
        std::cout << "# top\tlen\n";
        for (const WDString& s : x.strings) std::cout << s.top << "\t" << s.length << "\n";
    }
    return 0;
}

int cmd_rstar(int d, const RootSubset& I, const std::string& format) {
    const BiGradedR r = r_star(I);
    if (format == "json") {
        json out = to_json(r);
        out["I"] = to_json(I);
        emit_json(out);
    } else {
        emit_args_tsv({{"d", std::to_string(d)}, {"I", join(I.indices())}});
        std::cout << "# kind\tdeg\ti\tj\tdim\n";
        for (const auto& [key, dim] : r.dims) {
            const auto [n, i, j] = key;
            std::cout << "cell\t" << n << "\t" << i << "\t" << j << "\t" << dim << "\n";
        }
        for (const IsoComponent& c : r.lefschetz)
            std::cout << "iso\t" << c.degree << "\t" << c.i << "\t" << c.j << "\t1\n";
    }
    return 0;
}

int cmd_verify(int d, const std::string& format) {
    check_enum_rank(d);
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerifyReport> reports;
    int failures = 0;
    for (const RootSubset& I : strict_subsets(d)) {
        reports.push_back(verify_main_theorem(I));
        if (!reports.back().ok) ++failures;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    const std::string summary = std::to_string(reports.size() - failures) + "/" +
                                std::to_string(reports.size()) + " subsets verified";
    if (format == "json") {
        json out = {{"d", d}, {"all_ok", failures == 0}, {"summary", summary},
                    {"results", json::array()}};
        for (const VerifyReport& r : reports) out["results"].push_back(to_json(r));
        emit_json(out);
    } else {
        emit_args_tsv({{"d", std::to_string(d)}});
        std::cout << "# I_bitmask\tI\tok\tlhs\trhs\n";
        for (const VerifyReport& r : reports)
            std::cout << r.I.bits() << "\t" << join(r.I.indices()) << "\t"
                      << (r.ok ? "true" : "false") << "\t" << to_json(r.lhs).dump() << "\t"
                      << to_json(r.rhs).dump() << "\n";
        std::cout << "# summary\t" << summary << "\n";
    }
    std::cerr << "verify: " << summary << " in " << ms << " ms\n";
    return failures == 0 ? 0 : 1;
}

int cmd_ext(int d, const std::string& kind, const RootSubset& J, const RootSubset& I,
            const std::string& format) {
    ExtKind k;
    if (kind == "ii")
        k = ExtKind::ii;
    else if (kind == "vi")
        k = ExtKind::vi;
    else if (kind == "pi_i")
        k = ExtKind::pi_i;
    else
        throw std::invalid_argument("--kind must be one of ii, vi, pi_i");
    const PoincarePolynomial p = ext_poincare(k, J, I);
    if (format == "json") {
        emit_json({{"d", d},
                   {"kind", kind},
                   {"J", to_json(J)},
                   {"I", to_json(I)},
                   {"poly", to_json(p)}});
    } else {
        emit_args_tsv({{"d", std::to_string(d)},
                       {"kind", kind},
                       {"J", join(J.indices())},
                       {"I", join(I.indices())}});
        std::cout << "# degree\tcoeff\n";
        for (auto [deg, c] : p.coeffs) std::cout << deg << "\t" << c << "\n";
    }
    return 0;
}

int cmd_e1(int d, const RootSubset& I, int i, const std::string& format) {
    const E1Page page = e1_page(I, i);
    if (format == "json") {
        emit_json(to_json(page));
    } else {
        emit_args_tsv({{"d", std::to_string(d)}, {"I", join(I.indices())},
                       {"i", std::to_string(i)}});
        int p_min = 0, p_max = 0, q_min = 0, q_max = 0;
        bool first = true;
        for (const auto& [pq, dim] : page.cells) {
            const auto [p, q] = pq;
            if (first || p < p_min) p_min = p;
            if (first || p > p_max) p_max = p;
            if (first || q < q_min) q_min = q;
            if (first || q > q_max) q_max = q;
            first = false;
        }
        std::cout << "q\\p";
        for (int p = p_min; p <= p_max; ++p) std::cout << "\t" << p;
        std::cout << "\n";
        for (int q = q_max; q >= q_min; --q) {
            std::cout << q;
            for (int p = p_min; p <= p_max; ++p) {
                const auto it = page.cells.find({p, q});
                std::cout << "\t" << (it == page.cells.end() ? 0 : it->second);
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_euler(int d, const RootSubset& I, int i, const std::string& format) {
    const bool ok = euler_check(I, i);
    if (format == "json") {
        emit_json({{"d", d}, {"I", to_json(I)}, {"i", i}, {"ok", ok}});
    } else {
        emit_args_tsv({{"d", std::to_string(d)}, {"I", join(I.indices())},
                       {"i", std::to_string(i)}});
        std::cout << "# ok\n" << (ok ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_params(std::uint64_t q, std::uint64_t ell, int d, const std::string& format) {
    const Params p = make_params(q, ell, d);
    json out = {{"coxeter", p.coxeter}};
    if (p.coxeter) out["kernel_count"] = cuspidal_kernel_count(q, ell, d);
    if (format == "json") {
        emit_json(out);
    } else {
        emit_args_tsv({{"q", std::to_string(q)}, {"ell", std::to_string(ell)},
                       {"d", std::to_string(d)}});
        std::cout << "coxeter\t" << (p.coxeter ? "true" : "false") << "\n";
        if (p.coxeter) std::cout << "kernel_count\t" << out["kernel_count"].dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact subset calculus of the unipotent block of GL_d under the Coxeter "
                 "congruence: classification tables, decomposition matrices, transfers, "
                 "Weil-Deligne data, bigraded cohomology models, Ext/Euler bookkeeping"};
    app.require_subcommand(1);

    int d = 2;
    std::uint64_t q = 2, ell = 3;
    int idx = 0;
    std::string subset_text, subset_text_j;
    std::string kind = "ii";
    std::string format = "json";

    const auto add_common = [&](CLI::App* cmd, bool needs_I) {
        cmd->add_option("--d", d, "rank d (matrix size)")->required();
        if (needs_I)
            cmd->add_option("--I", subset_text, "subset: bitmask int or comma list, e.g. 5 or 1,3")
                ->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "tsv"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "per-subset classification table");
    add_common(classify, false);

    CLI::App* decomp = app.add_subcommand("decomp-matrix", "decomposition matrix of the block");
    add_common(decomp, false);

    CLI::App* ljc = app.add_subcommand("lj", "effective transfer of one class");
    add_common(ljc, true);

    CLI::App* wdc = app.add_subcommand("wd", "Weil-Deligne object of one class");
    add_common(wdc, true);

    CLI::App* rstarc = app.add_subcommand("rstar", "bigraded degree table with Lefschetz data");
    add_common(rstarc, true);

    CLI::App* verifyc = app.add_subcommand("verify", "check the main identity on all subsets");
    add_common(verifyc, false);

    CLI::App* extc = app.add_subcommand("ext", "graded Ext dimensions as a polynomial");
    add_common(extc, true);
    extc->add_option("--kind", kind, "ii, vi or pi_i")->required();
    extc->add_option("--J", subset_text_j, "second subset argument")->required();

    CLI::App* e1c = app.add_subcommand("e1", "first spectral-sequence page");
    add_common(e1c, true);
    e1c->add_option("--i", idx, "Frobenius index, 0 <= i < d")->required();

    CLI::App* eulerc = app.add_subcommand("euler", "Euler check of the first page");
    add_common(eulerc, true);
    eulerc->add_option("--i", idx, "Frobenius index, 0 <= i < d")->required();

    CLI::App* paramsc = app.add_subcommand("params", "congruence check and kernel count");
    paramsc->add_option("--q", q, "prime power >= 2")->required();
    paramsc->add_option("--ell", ell, "prime not dividing q")->required();
    paramsc->add_option("--d", d, "rank d")->required();
    paramsc->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(classify)) return cmd_classify(d, format);
        if (app.got_subcommand(decomp)) return cmd_decomp(d, format);
        if (app.got_subcommand(ljc)) return cmd_lj(d, parse_subset(d, subset_text), format);
        if (app.got_subcommand(wdc)) return cmd_wd(d, parse_subset(d, subset_text), format);
        if (app.got_subcommand(rstarc)) return cmd_rstar(d, parse_subset(d, subset_text), format);
        if (app.got_subcommand(verifyc)) return cmd_verify(d, format);
        if (app.got_subcommand(extc))
            return cmd_ext(d, kind, parse_subset(d, subset_text_j), parse_subset(d, subset_text),
                           format);
        if (app.got_subcommand(e1c)) return cmd_e1(d, parse_subset(d, subset_text), idx, format);
        if (app.got_subcommand(eulerc))
            return cmd_euler(d, parse_subset(d, subset_text), idx, format);
        if (app.got_subcommand(paramsc)) return cmd_params(q, ell, d, format);
    } catch (const std::exception& e) {
        std::cerr << "coxblock: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
