#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fbt/congruence_count.hpp"
#include "fbt/enumerate.hpp"
#include "fbt/families.hpp"
#include "fbt/irreducibles.hpp"
#include "fbt/lattice.hpp"
#include "fbt/order.hpp"
#include "fbt/spine.hpp"

namespace py = pybind11;
using namespace fbt;

namespace {

py::int_ to_py(const mpz_class& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<mpz_class>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

TableauClass class_of(const std::string& s) {
  if (s == "all") return TableauClass::All;
  if (s == "small") return TableauClass::Small;
  if (s == "binary") return TableauClass::Binary;
  throw Error(ErrorKind::BadLabel, "unknown class '" + s + "'");
}

py::tuple label_tuple(const EdgeLabel& l) {
  const char* s = l.sigma == Sigma::Empty ? "e" : l.sigma == Sigma::Left ? "l" : "b";
  return py::make_tuple(l.i, l.j, s);
}

EdgeLabel label_from(int i, int j, const std::string& s) {
  Sigma sigma = s == "e" ? Sigma::Empty : s == "l" ? Sigma::Left : s == "b" ? Sigma::Dot : Sigma::Dot;
  if (s != "e" && s != "l" && s != "b") throw Error(ErrorKind::BadLabel, "sigma must be e, l or b");
  return {i, j, sigma};
}

}  // namespace

PYBIND11_MODULE(_fbtableau, m) {
  m.doc() = "fb-tableaux, the extra slow Tamari lattices and their counting sequences";

  py::register_exception<Error>(m, "TableauError", PyExc_ValueError);

  py::class_<FbTableau>(m, "Tableau")
      .def_static("parse", &parse_text, py::arg("text"))
      .def_static("bottom", &bottom, py::arg("n"))
      .def_static("top", &top, py::arg("n"))
      .def_readonly("n", &FbTableau::n)
      .def_property_readonly("up_row", [](const FbTableau& t) {
        std::vector<int> v;
        for (int c = 1; c <= t.n - 1; ++c) v.push_back(t.up_row(c));
        return v;
      })
      .def_property_readonly("left_col", [](const FbTableau& t) {
        std::vector<int> v;
        for (int r = 2; r <= t.n; ++r) v.push_back(t.left_col(r));
        return v;
      })
      .def_property_readonly("border", [](const FbTableau& t) { return border_string(border_word(t)); })
      .def("is_small", &is_small)
      .def("is_binary", &is_binary)
      .def("conjugate", &conjugate)
      .def("covers", [](const FbTableau& t) {
        py::list out;
        for (auto& [u, l] : covers(t)) out.append(py::make_tuple(u, label_tuple(l)));
        return out;
      })
      .def("__le__", [](const FbTableau& a, const FbTableau& b) { return leq(a, b); })
      .def("__eq__", [](const FbTableau& a, const FbTableau& b) { return a == b; })
      .def("__hash__", [](const FbTableau& t) { return FbTableauHash{}(t); })
      .def("__and__", [](const FbTableau& a, const FbTableau& b) { return meet(a, b); })
      .def("__or__", [](const FbTableau& a, const FbTableau& b) { return join(a, b); })
      .def("__str__", &render_text)
      .def("__repr__", [](const FbTableau& t) { return "Tableau.parse(" + py::repr(py::str(render_text(t))).cast<std::string>() + ")"; });

  m.def("leq", &leq);
  m.def("meet", &meet);
  m.def("join", &join);

  m.def("enumerate", [](int n, const std::string& cls) { return enumerate(n, class_of(cls)); },
        py::arg("n"), py::arg("cls") = "all");
  m.def("count", [](int n, const std::string& cls) { return to_py(count(n, class_of(cls))); },
        py::arg("n"), py::arg("cls") = "all");

  m.def("join_irreducible", [](int n, int i, int j, const std::string& s) { return join_irr_tableau(n, label_from(i, j, s)); },
        py::arg("n"), py::arg("i"), py::arg("j"), py::arg("sigma"));
  m.def("join_irreducible_labels", [](int n, const std::string& family) {
    py::list out;
    for (auto& l : join_irr_labels(n, parse_family(family))) out.append(label_tuple(l));
    return out;
  }, py::arg("n"), py::arg("family") = "estam");
  m.def("is_on_spine", &is_on_spine);

  m.def("spine_count", [](int n, const std::string& family) {
    return to_py(parse_family(family) == Family::STam ? spine_count_stam(n) : spine_count_estam(n));
  }, py::arg("n"), py::arg("family") = "estam");
  m.def("congruence_count", [](int n, const std::string& family) { return to_py(weighted_sum(n, parse_family(family))); },
        py::arg("n"), py::arg("family") = "estam");
  m.def("series", [](const std::string& which, int order) {
    if (which == "estam-cong") return to_py(cf_series(estam_cf_a(), estam_cf_lambda(), order).integer_coefficients());
    if (which == "stam-cong") return to_py(cf_series(stam_cf_a(), stam_cf_lambda(), order).integer_coefficients());
    if (which == "catalan")
      return to_py(cf_series(constant_sequence(0), constant_sequence(1), order).integer_coefficients());
    throw Error(ErrorKind::BadLabel, "unknown series '" + which + "'");
  }, py::arg("which"), py::arg("order"));

  m.def("check", [](const std::string& family, int n) {
    Family f = parse_family(family);
    if (n > (f == Family::ESTam ? 4 : 5)) throw Error(ErrorKind::TooLarge, "check limited to esTam n <= 4, others n <= 5");
    auto tl = build_tableau_lattice(n, f);
    const auto& L = tl.lattice;
    auto ex = check_extremal(L);
    py::dict out;
    out["size"] = L.size();
    out["lattice"] = check_lattice_laws(L);
    out["semidistributive"] = check_semidistributive(L);
    out["selfdual"] = check_selfdual(L, tl.conjugation());
    out["extremal"] = ex.extremal;
    out["longest_chain"] = ex.longest_chain;
    out["congruences"] = to_py(congruence_lattice(L).count);
    return out;
  }, py::arg("family"), py::arg("n"));
}
