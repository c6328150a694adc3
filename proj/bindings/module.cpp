#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxblock/arithmetic.hpp"
#include "coxblock/cohomology.hpp"
#include "coxblock/ext_spectral.hpp"
#include "coxblock/grothendieck.hpp"
#include "coxblock/jacquet_langlands.hpp"
#include "coxblock/weil_deligne.hpp"

namespace py = pybind11;
using namespace coxblock;

namespace {

RootSubset subset_from_object(int d, const py::object& spec) {
    if (py::isinstance<RootSubset>(spec)) return spec.cast<RootSubset>();
    if (py::isinstance<py::int_>(spec)) return {d, spec.cast<std::uint32_t>()};
    return RootSubset::from_indices(d, spec.cast<std::vector<int>>());
}

py::tuple subset_key(int d, std::uint32_t bits) {
    return py::tuple(py::cast(RootSubset(d, bits).indices()));
}

py::dict pi_class_to_dict(const PiBasisClass& x) {
    py::dict out;
    for (auto [b, c] : x.coeffs) out[subset_key(x.d, b)] = c;
    return out;
}

PiBasisClass pi_class_from_dict(int d, const py::dict& coeffs) {
    PiBasisClass out(d);
    for (auto item : coeffs) {
        const auto indices = item.first.cast<std::vector<int>>();
        out.add(RootSubset::from_indices(d, indices), item.second.cast<long long>());
    }
    return out;
}

py::dict i_class_to_dict(const IBasisClass& x) {
    py::dict out;
    for (auto [b, c] : x.coeffs) out[subset_key(x.d, b)] = c;
    return out;
}

ExtKind ext_kind_from_string(const std::string& kind) {
    if (kind == "ii") return ExtKind::ii;
    if (kind == "vi") return ExtKind::vi;
    if (kind == "pi_i") return ExtKind::pi_i;
    throw std::invalid_argument("kind must be one of 'ii', 'vi', 'pi_i'");
}

py::list sspair_to_list(const SSPair& s) {
    py::list out;
    for (const auto& [j, wd] : s.entries) out.append(py::make_tuple(j, wd));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact combinatorics of the unipotent block of GL_d under the Coxeter "
              "congruence: subset calculus, Grothendieck classes, transfers, Weil-Deligne "
              "strings, the bigraded cohomology model and its verification.";

    py::class_<RootSubset>(m, "RootSubset")
        .def(py::init([](int d, const py::object& spec) { return subset_from_object(d, spec); }),
             py::arg("d"), py::arg("members"),
             "members: bitmask int or iterable of indices in [0, d)")
        .def_property_readonly("d", &RootSubset::rank)
        .def_property_readonly("bitmask", &RootSubset::bits)
        .def("indices", &RootSubset::indices)
        .def("__len__", &RootSubset::size)
        .def("__contains__", [](const RootSubset& I, int k) { return I.contains(k); })
        .def_property_readonly("is_classical", &RootSubset::is_classical)
        .def_property_readonly("is_strict", &RootSubset::is_strict)
        .def("shifted", &RootSubset::shifted, py::arg("k"))
        .def("complement", &RootSubset::complement)
        .def(py::self == py::self)
        .def("__hash__", [](const RootSubset& I) {
            return py::hash(py::make_tuple(I.rank(), I.bits()));
        })
        .def("__repr__", [](const RootSubset& I) {
            return "RootSubset(d=" + std::to_string(I.rank()) + ", " + I.to_string() + ")";
        });

    py::class_<WDString>(m, "WDString")
        .def(py::init([](int top, int length) { return WDString{top, length}; }),
             py::arg("top"), py::arg("len"))
        .def_readonly("top", &WDString::top)
        .def_readonly("len", &WDString::length)
        .def(py::self == py::self)
        .def("__repr__", [](const WDString& s) {
            return "WDString(top=" + std::to_string(s.top) +
                   ", len=" + std::to_string(s.length) + ")";
        });

    py::class_<WDObject>(m, "WDObject")
        .def(py::init([](int d, const std::string& direction,
                         const std::vector<std::pair<int, int>>& strings) {
                 std::vector<WDString> s;
                 for (auto [top, len] : strings) s.push_back({top, len});
                 if (direction != "L" && direction != "N")
                     throw std::invalid_argument("direction must be 'L' or 'N'");
                 return WDObject(d, direction == "L" ? WDDirection::L : WDDirection::N,
                                 std::move(s));
             }),
             py::arg("d"), py::arg("direction"), py::arg("strings"))
        .def_readonly("d", &WDObject::d)
        .def_property_readonly("direction",
                               [](const WDObject& x) { return to_string(x.direction); })
        .def_property_readonly("strings",
                               [](const WDObject& x) {
                                   py::list out;
                                   for (const WDString& s : x.strings)
                                       out.append(py::make_tuple(s.top, s.length));
                                   return out;
                               })
        .def("dim", &WDObject::dim)
        .def("lines", &WDObject::lines)
        .def(py::self == py::self)
        .def("__repr__", [](const WDObject& x) {
            std::string s = "WDObject(d=" + std::to_string(x.d) + ", " + to_string(x.direction);
            for (const WDString& str : x.strings)
                s += ", (" + std::to_string(str.top) + "," + std::to_string(str.length) + ")";
            return s + ")";
        });

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("ok", &VerifyReport::ok)
        .def_property_readonly("I", [](const VerifyReport& r) { return r.I; })
        .def_property_readonly("lhs", [](const VerifyReport& r) { return sspair_to_list(r.lhs); })
        .def_property_readonly("rhs", [](const VerifyReport& r) { return sspair_to_list(r.rhs); })
        .def("__repr__", [](const VerifyReport& r) {
            return std::string("VerifyReport(") + (r.ok ? "ok" : "MISMATCH") + ", I=" +
                   r.I.to_string() + ")";
        });

    // subsets, partitions, descent data
    m.def("strict_subsets", &strict_subsets, py::arg("d"));
    m.def("classical_subsets", &classical_subsets, py::arg("d"));
    m.def("coxeter_shift", &coxeter_shift, py::arg("I"), py::arg("k"));
    m.def("levi_partition",
          [](const RootSubset& I) { return levi_partition(I).parts; }, py::arg("I"));
    m.def("whittaker_partition",
          [](const RootSubset& I) { return whittaker_partition(I).parts; }, py::arg("I"));
    m.def("transpose_partition", [](const std::vector<int>& parts) {
        return Partition(parts).transpose().parts;
    });
    m.def("descents",
          [](const std::vector<int>& images) {
              return descents(Permutation{static_cast<int>(images.size()), images});
          },
          py::arg("images"), "descent pair (classical, affine) of the permutation w");
    m.def("partial", &partial, py::arg("I"), py::arg("k"));
    m.def("jacquet_module",
          [](const std::string& kind, const RootSubset& I) {
              if (kind != "pi" && kind != "v")
                  throw std::invalid_argument("kind must be 'pi' or 'v'");
              return jacquet_module(kind == "pi" ? JacquetKind::pi : JacquetKind::v, I);
          },
          py::arg("kind"), py::arg("I"));
    m.def("j_corner", &j_corner, py::arg("i"), py::arg("I"));

    // Grothendieck classes as {tuple(indices): coeff} dictionaries
    m.def("class_i", [](const RootSubset& I) { return pi_class_to_dict(class_i(I)); });
    m.def("class_pi_in_i",
          [](const RootSubset& I) { return i_class_to_dict(class_pi_in_i(I)); });
    m.def("class_v", [](const RootSubset& I) { return pi_class_to_dict(class_v(I)); });
    m.def("class_hbar",
          [](int d, int i) { return pi_class_to_dict(class_hbar(d, i)); }, py::arg("d"),
          py::arg("i"));
    m.def("twist_class",
          [](int d, const py::dict& coeffs, int k) {
              return pi_class_to_dict(twist_class(pi_class_from_dict(d, coeffs), k));
          },
          py::arg("d"), py::arg("coeffs"), py::arg("k"));
    m.def("decomposition_matrix", [](int d) {
        const DecompositionMatrix dm = decomposition_matrix(d);
        py::dict out;
        out["d"] = dm.d;
        py::list rows, cols, entries;
        for (const RootSubset& I : dm.rows) rows.append(I);
        for (const RootSubset& J : dm.columns) cols.append(J);
        for (const auto& row : dm.entries) entries.append(py::cast(row));
        out["rows"] = rows;
        out["columns"] = cols;
        out["entries"] = entries;
        return out;
    });

    // transfer
    m.def("lj", [](const RootSubset& I) { return lj(I).coeffs; });
    m.def("lj_effective", [](const RootSubset& I) {
        const LJEffective e = lj_effective(I);
        return py::make_tuple(e.sign, e.chars.indices());
    });
    m.def("lj_linear", [](int d, const py::dict& coeffs) {
        return lj_linear(pi_class_from_dict(d, coeffs)).coeffs;
    });

    // Weil-Deligne calculus
    m.def("wd_elliptic", &wd_elliptic, py::arg("I"));
    m.def("jordan_type", [](const WDObject& x) { return jordan_type(x).parts; });
    m.def("deligne_primitive_parts", &deligne_primitive_parts, py::arg("x"));
    m.def("wd_from_primitive_parts",
          [](int d, const std::string& direction, const PrimitiveParts& parts) {
              return wd_from_primitive_parts(
                  d, direction == "L" ? WDDirection::L : WDDirection::N, parts);
          },
          py::arg("d"), py::arg("direction"), py::arg("parts"));
    m.def("transpose_wd", &transpose_wd, py::arg("x"));
    m.def("twist_wd", &twist_wd, py::arg("x"), py::arg("k"));
    m.def("wd_operator_matrix", [](const WDObject& x) {
        const WDMatrix m_ = wd_operator_matrix(x);
        return py::make_tuple(m_.entries, m_.labels);
    });

    // cohomology model
    m.def("r_star", [](const RootSubset& I) {
        const BiGradedR r = r_star(I);
        py::dict cells;
        for (const auto& [key, dim] : r.dims) {
            const auto [n, i, j] = key;
            cells[py::make_tuple(n, i, j)] = dim;
        }
        py::list isos;
        for (const IsoComponent& c : r.lefschetz)
            isos.append(py::make_tuple(c.degree, c.i, c.j));
        py::dict out;
        out["d"] = r.d;
        out["cells"] = cells;
        out["lefschetz"] = isos;
        return out;
    });
    m.def("lefschetz", [](const RootSubset& I) {
        py::list out;
        for (const IsoComponent& c : lefschetz(I)) out.append(py::make_tuple(c.degree, c.i, c.j));
        return out;
    });
    m.def("semisimplify_lhs",
          [](const RootSubset& I) { return sspair_to_list(semisimplify_lhs(I)); });
    m.def("rhs", [](const RootSubset& I) { return sspair_to_list(rhs(I)); });
    m.def("verify_main_theorem", &verify_main_theorem, py::arg("I"));
    m.def("twist_equivariance_check", &twist_equivariance_check, py::arg("I"), py::arg("k"));
    m.def("non_elliptic_r_star", [](int d) {
        const BiGradedR r = non_elliptic_r_star(d);
        py::dict out;
        out["d"] = r.d;
        out["cells"] = py::dict();
        out["lefschetz"] = py::list();
        return out;
    });
    m.def("ladic_cohomology", [](int d) {
        py::list out;
        for (const LadicEntry& e : ladic_cohomology(d)) {
            py::dict entry;
            entry["degree"] = e.degree;
            entry["subset"] = e.subset;
            entry["tate_twist"] = e.tate_twist;
            entry["cuspidal_kernel"] = e.cuspidal_kernel;
            out.append(entry);
        }
        return out;
    });

    // Ext dimensions and the first page
    m.def("dim_Y", &dim_Y, py::arg("I"));
    m.def("ext_poincare",
          [](const std::string& kind, const RootSubset& J, const RootSubset& I) {
              return ext_poincare(ext_kind_from_string(kind), J, I).coeffs;
          },
          py::arg("kind"), py::arg("J"), py::arg("I"));
    m.def("e1_page", [](const RootSubset& I, int i) {
        const E1Page page = e1_page(I, i);
        py::dict cells;
        for (const auto& [pq, dim] : page.cells)
            cells[py::make_tuple(pq.first, pq.second)] = dim;
        return cells;
    });
    m.def("euler_check", &euler_check, py::arg("I"), py::arg("i"));

    // arithmetic parameters
    m.def("validate_coxeter", &validate_coxeter, py::arg("q"), py::arg("ell"), py::arg("d"));
    m.def("cuspidal_kernel_count", &cuspidal_kernel_count, py::arg("q"), py::arg("ell"),
          py::arg("d"));
}
