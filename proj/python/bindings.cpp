#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mz/cli.hpp"
#include "mz/errors.hpp"
#include "mz/oracle.hpp"
#include "mz/topo.hpp"
#include "mz/verify.hpp"
#include "mz/zeta.hpp"

namespace py = pybind11;
using namespace mz;

namespace {

GroupKind kind_of(const std::string& group) {
  if (group == "gl2") return GroupKind::GL2;
  if (group == "pgl2") return GroupKind::PGL2;
  throw UsageError("group must be gl2 or pgl2");
}

std::shared_ptr<const CharacterTable> table(const std::string& group, long q) {
  return CharacterTable::build(Group::build(kind_of(group), q));
}

std::vector<int> classes(const Group& g, const std::vector<std::string>& specs) {
  std::vector<int> out;
  for (const auto& s : specs) out.push_back(parse_class_spec(g, s));
  return out;
}

SurfaceSpec surface(const Group& g, long genus, bool orientable, const std::vector<std::string>& insert) {
  return SurfaceSpec{orientable, genus, classes(g, insert)};
}

py::dict character_table(const std::string& group, long q) {
  const auto t = table(group, q);
  const Group& g = t->group();
  py::list cls, irreps, values, exact;
  for (const auto& c : g.classes()) {
    cls.append(py::dict(py::arg("label") = c.label, py::arg("size") = c.size,
                        py::arg("centralizer_order") = c.centralizer_order));
  }
  for (int i = 0; i < t->num_irreps(); ++i) {
    irreps.append(py::dict(py::arg("label") = irrep_label(t->irrep(i)), py::arg("dim") = t->dim(i),
                           py::arg("fs") = t->fs(i)));
    py::list row, exact_row;
    for (int c = 0; c < g.num_classes(); ++c) {
      const CycNumber& v = t->value(i, c);
      row.append(v.to_complex());
      std::vector<std::string> coeffs;
      for (const auto& r : v.coefficients()) coeffs.push_back(r.to_string());
      exact_row.append(coeffs);
    }
    values.append(row);
    exact.append(exact_row);
  }
  return py::dict(py::arg("group") = g.name(), py::arg("order") = g.order(), py::arg("conductor") = t->conductor(),
                  py::arg("classes") = cls, py::arg("irreps") = irreps, py::arg("values") = values,
                  py::arg("exact_values") = exact);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Character tables, zeta functions and surface-group counts for GL(2,F_q) and PGL(2,F_q).";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);

  m.def("character_table", &character_table, py::arg("group"), py::arg("q"),
        "Classes, irreps and values; exact values as power-basis coefficient strings.");

  m.def(
      "zeta",
      [](const std::string& group, long q, long s) { return zeta(*table(group, q), s).to_string(); },
      py::arg("group"), py::arg("q"), py::arg("s"), "Exact zeta value at an integer, as a 'num/den' string.");
  m.def(
      "zeta_complex",
      [](const std::string& group, long q, Complex s) { return zeta(*table(group, q), s); }, py::arg("group"),
      py::arg("q"), py::arg("s"));
  m.def(
      "zeta_closed",
      [](const std::string& group, long q, long s) {
        return zeta_closed(kind_of(group), static_cast<int>(q), s).to_string();
      },
      py::arg("group"), py::arg("q"), py::arg("s"));
  m.def(
      "zeta_insert",
      [](const std::string& group, long q, const std::vector<std::string>& insert, long s) {
        const auto t = table(group, q);
        return zeta_insert(*t, classes(t->group(), insert), s).to_string();
      },
      py::arg("group"), py::arg("q"), py::arg("insert"), py::arg("s"));
  m.def(
      "zeta_fs",
      [](const std::string& group, long q, int indicator, long s) {
        return zeta_fs(*table(group, q), indicator, s).to_string();
      },
      py::arg("group"), py::arg("q"), py::arg("indicator"), py::arg("s"));
  m.def(
      "zeta_double", [](long q, long s) { return zeta_double(*table("gl2", q), s).to_string(); }, py::arg("q"),
      py::arg("s"));

  m.def(
      "hom_count",
      [](const std::string& group, long q, long genus, bool orientable, const std::vector<std::string>& insert) {
        const auto t = table(group, q);
        return hom_count(*t, surface(t->group(), genus, orientable, insert)).value.to_string();
      },
      py::arg("group"), py::arg("q"), py::arg("genus"), py::arg("orientable") = true,
      py::arg("insert") = std::vector<std::string>{});
  m.def(
      "quotient_count",
      [](long q, long genus, bool orientable, const std::vector<std::string>& insert) {
        const auto t = table("gl2", q);
        return quotient_count(*t, surface(t->group(), genus, orientable, insert)).value.to_string();
      },
      py::arg("q"), py::arg("genus"), py::arg("orientable") = true, py::arg("insert") = std::vector<std::string>{});
  m.def(
      "oracle_hom_count",
      [](const std::string& group, long q, long genus, bool orientable, const std::vector<std::string>& insert) {
        const auto g = Group::build(kind_of(group), q);
        py::gil_scoped_release release;
        return Oracle(g).hom_count(surface(*g, genus, orientable, insert)).to_string();
      },
      py::arg("group"), py::arg("q"), py::arg("genus"), py::arg("orientable") = true,
      py::arg("insert") = std::vector<std::string>{});

  m.def(
      "verify",
      [](int q, bool deep) {
        VerifyOptions opts;
        opts.q = q;
        opts.deep = deep;
        std::vector<std::vector<std::string>> out;
        for (const auto& r : verify_suite(opts)) out.push_back({r.group, r.name, status_name(r.status), r.detail});
        return out;
      },
      py::arg("q"), py::arg("deep") = false, "Rows of (group, check, status, detail).");

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "mednykh-zeta");
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit code, stdout, stderr).");

  m.attr("__version__") = "0.1.0";
}
