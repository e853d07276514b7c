#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heffter/construct.hpp"
#include "heffter/decompose.hpp"
#include "heffter/io.hpp"
#include "heffter/oracle.hpp"
#include "heffter/verify.hpp"

namespace py = pybind11;
using namespace heffter;

namespace {

Axis axis_of(const std::string& s) {
    if (s == "row" || s == "rows") return Axis::Row;
    if (s == "col" || s == "cols" || s == "column" || s == "columns")
        return Axis::Column;
    throw py::value_error("axis must be 'rows' or 'cols'");
}

ArrayClass class_of(const std::string& s) {
    if (s == "n3") return ArrayClass::N3;
    if (s == "n0") return ArrayClass::N0;
    throw py::value_error("cls must be 'n3' or 'n0'");
}

py::dict report_dict(const VerifyReport& rep) {
    py::dict d;
    d["fill_ok"] = rep.fill_ok;
    d["support_ok"] = rep.support_ok;
    d["modular_sums_ok"] = rep.modular_sums_ok;
    d["integer_sums_ok"] = rep.integer_sums_ok;
    d["globally_simple"] = rep.globally_simple;
    py::list witnesses;
    for (const auto& w : rep.witnesses)
        witnesses.append(py::make_tuple(axis_name(w.axis), w.index, w.detail));
    d["witnesses"] = witnesses;
    return d;
}

}  // namespace

PYBIND11_MODULE(_heffter, m) {
    m.doc() = "globally simple integer Heffter arrays: construction, "
              "verification and cycle decompositions";

    // translators run newest-first, so the base goes in before the others
    py::register_exception<HeffterError>(m, "HeffterError");
    py::register_exception<ClassError>(m, "ClassError");
    py::register_exception<UnsupportedClassError>(m, "UnsupportedClassError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<CollisionError>(m, "CollisionError");
    py::register_exception<NotSimpleError>(m, "NotSimpleError");

    py::class_<Dims>(m, "Dims")
        .def(py::init<int, int, int, int>(), py::arg("m"), py::arg("n"),
             py::arg("h"), py::arg("k"))
        .def_readonly("m", &Dims::m)
        .def_readonly("n", &Dims::n)
        .def_readonly("h", &Dims::h)
        .def_readonly("k", &Dims::k)
        .def_property_readonly("modulus", &Dims::modulus)
        .def_property_readonly("filled", &Dims::filled)
        .def("__repr__", [](const Dims& d) {
            return "Dims(m=" + std::to_string(d.m) + ", n=" + std::to_string(d.n) +
                   ", h=" + std::to_string(d.h) + ", k=" + std::to_string(d.k) + ")";
        });

    py::class_<PartialArray>(m, "Array")
        .def(py::init<Dims>())
        .def_property_readonly("dims", &PartialArray::dims)
        .def("__len__", &PartialArray::size)
        .def("__eq__", [](const PartialArray& a, const PartialArray& b) { return a == b; })
        .def("at", [](const PartialArray& a, int r, int c) { return a.at({r, c}); },
             py::arg("row"), py::arg("col"))
        .def("filled",
             [](const PartialArray& a, int r, int c) { return a.filled({r, c}); },
             py::arg("row"), py::arg("col"))
        .def("place",
             [](PartialArray& a, int r, int c, std::int64_t v) { a.place({r, c}, v); },
             py::arg("row"), py::arg("col"), py::arg("value"))
        .def("cells",
             [](const PartialArray& a) {
                 py::list out;
                 for (const auto& [cell, v] : a.entries())
                     out.append(py::make_tuple(cell.row, cell.col, v));
                 return out;
             })
        .def("line",
             [](const PartialArray& a, const std::string& axis, int index) {
                 return a.line_values(axis_of(axis), index);
             },
             py::arg("axis"), py::arg("index"))
        .def("to_json", &to_json)
        .def("to_csv", &to_csv)
        .def("to_grid", &to_grid);

    m.def("construct", &construct, py::arg("n"), py::arg("k"),
          py::arg("force") = false,
          "build the globally simple integer Heffter array H(n;k)");
    m.def("wrap_index", &wrap_index, py::arg("i"), py::arg("n"));
    m.def("canonical_residue", &canonical_residue, py::arg("x"), py::arg("modulus"));

    m.def("from_json", &from_json);
    m.def("from_csv", &from_csv);
    m.def("load_array", &load_array);

    m.def("verify", [](const PartialArray& a) { return report_dict(verify_array(a)); },
          "full report: fill counts, support, sums, global simplicity");
    m.def("is_heffter",
          [](const PartialArray& a, bool integer) {
              return verify_array(a).heffter_ok(integer);
          },
          py::arg("array"), py::arg("integer") = false);
    m.def("is_globally_simple",
          [](const PartialArray& a) { return verify_array(a).globally_simple; });
    m.def("partial_sums",
          [](const std::vector<std::int64_t>& entries, std::int64_t modulus) {
              return partial_sums(entries, modulus);
          },
          py::arg("entries"), py::arg("modulus"));
    m.def("is_simple",
          [](const std::vector<std::int64_t>& entries, std::int64_t modulus) {
              return is_simple(entries, modulus).ok;
          },
          py::arg("entries"), py::arg("modulus"));
    m.def("sum_table",
          [](const PartialArray& a, const std::string& axis, const std::string& cls) {
              py::list out;
              for (const auto& tr : sum_table(a, axis_of(axis), class_of(cls)))
                  out.append(py::make_tuple(tr.index, tr.sums));
              return out;
          },
          py::arg("array"), py::arg("axis"), py::arg("cls"),
          "partial-sum traces in the reference-table convention");
    m.def("sum_table_csv",
          [](const PartialArray& a, const std::string& axis, const std::string& cls) {
              return sum_table_csv(sum_table(a, axis_of(axis), class_of(cls)));
          },
          py::arg("array"), py::arg("axis"), py::arg("cls"));
    m.def("diagonal_bands", [](const PartialArray& a) {
        auto bands = scan_diagonal_bands(a);
        return py::make_tuple(bands.occupied, bands.empty_widths);
    });

    m.def("base_cycles",
          [](const PartialArray& a, const std::string& axis) {
              return base_cycles(a, axis_of(axis)).base;
          },
          py::arg("array"), py::arg("axis"),
          "one prefix-sum base cycle per line; raises NotSimpleError");
    m.def("decompose_check",
          [](const PartialArray& a) {
              auto rows = develop(base_cycles(a, Axis::Row));
              auto cols = develop(base_cycles(a, Axis::Column));
              auto rc = verify_decomposition(rows);
              auto cc = verify_decomposition(cols);
              auto orth = check_orthogonality(rows, cols);
              py::dict d;
              d["modulus"] = rows.modulus;
              d["rows_ok"] = rc.ok;
              d["cols_ok"] = cc.ok;
              d["edges"] = rc.edges_covered;
              d["orthogonal"] = orth.ok;
              return d;
          },
          "develop both systems, verify the edge partitions and orthogonality");
    m.def("compatibility",
          [](const PartialArray& a) {
              auto rep = check_compatible(natural_orderings(a), a.dims().filled());
              py::dict d;
              d["compatible"] = rep.compatible;
              d["cycle_type"] = rep.type_rc;
              d["cycle_type_reversed"] = rep.type_cr;
              return d;
          },
          "compose the natural row/column orderings and report the cycle type");
    m.def("gcd_compat_predicate",
          [](int n, int k) { return gcd_compat_predicate(n, k) == CompatPrediction::Yes; },
          py::arg("n"), py::arg("k"),
          "True when gcd(n, k-2) = 1 guarantees compatible orderings exist");

    m.def("search",
          [](int mm, int nn, int hh, int kk, std::size_t limit, std::uint64_t budget) {
              SearchSpec spec;
              spec.m = mm;
              spec.n = nn;
              spec.h = hh;
              spec.k = kk;
              spec.limit = limit;
              spec.budget = budget;
              auto res = brute_force_heffter(spec);
              py::dict d;
              d["solutions"] = res.solutions;
              d["nodes"] = res.nodes;
              d["budget_exceeded"] = res.budget_exceeded;
              return d;
          },
          py::arg("m"), py::arg("n"), py::arg("h"), py::arg("k"),
          py::arg("limit") = static_cast<std::size_t>(-1),
          py::arg("budget") = 50'000'000ull,
          "exhaustive search for tiny Heffter arrays");
    m.def("find_simple_ordering",
          [](const std::vector<std::int64_t>& entries, std::int64_t modulus,
             std::uint64_t budget) -> py::object {
              auto res = find_simple_ordering(entries, modulus, budget);
              if (res.ordering) return py::cast(*res.ordering);
              return py::none();
          },
          py::arg("entries"), py::arg("modulus"),
          py::arg("budget") = 1'000'000'000ull);
}
