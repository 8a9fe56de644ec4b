#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "bordx/bordclass.hpp"
#include "bordx/error.hpp"
#include "bordx/genfactory.hpp"
#include "bordx/numbers.hpp"
#include "bordx/tower.hpp"

namespace py = pybind11;
using namespace bordx;

namespace {

py::int_ to_py(const Integer& x) { return py::int_(py::str(x.get_str())); }

Integer from_py(const py::int_& x) { return Integer(py::str(x).cast<std::string>()); }

py::dict numbers_dict(const ChernVector& a) {
  py::dict d;
  for (std::size_t i = 0; i < a.keys().size(); ++i) d[py::str(a.keys()[i].key())] = to_py(a.at(i));
  return d;
}

ChernVector from_numbers(int dim, const py::dict& numbers) {
  ChernVector out(dim);
  for (auto [k, v] : numbers) {
    const auto key = k.cast<std::string>();
    Partition w = key.empty() ? Partition{} : Partition::parse(key);
    if (w.weight() != dim) throw py::value_error("partition " + key + " has the wrong weight");
    out.set(w, from_py(v.cast<py::int_>()));
  }
  return out;
}

py::dict certificate_dict(const GeneratorCertificate& c) {
  py::list combo;
  for (const auto& t : c.combination) combo.append(py::make_tuple(to_py(t.coefficient), t.source));
  py::dict checks;
  checks["c1_vanish"] = c.su_checks.c1_vanish;
  checks["in_W"] = c.su_checks.in_w;
  checks["in_ker_boundary"] = c.su_checks.in_ker_boundary;
  py::dict d;
  d["dimension"] = c.dimension;
  d["combination"] = combo;
  d["class"] = c.cls;
  d["s_value"] = to_py(c.s_value);
  d["target"] = to_py(c.target);
  d["su_checks"] = checks;
  d["valid"] = c.valid();
  return d;
}

Orientation parse_convention(const std::string& s) {
  if (s == "toric") return Orientation::toric;
  if (s == "bordism") return Orientation::bordism;
  throw py::value_error("convention must be 'toric' or 'bordism'");
}

Backend parse_backend(const std::string& s) {
  if (s == "triangular") return Backend::triangular;
  if (s == "lattice") return Backend::lattice;
  throw py::value_error("backend must be 'triangular' or 'lattice'");
}

TowerSpec family_spec(const std::string& family, int n1, int n2, const std::string& omega) {
  FamilyParams p;
  p.n1 = n1;
  p.n2 = n2;
  if (!omega.empty()) p.omega = Partition::parse(omega);
  return build_family(parse_family(family), p);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chern numbers, bordism operations and SU-bordism generators";

  py::class_<ChernVector>(m, "ChernVector")
      .def(py::init<int>(), py::arg("dim"))
      .def_static("from_numbers", &from_numbers, py::arg("dim"), py::arg("numbers"))
      .def_static("point", &ChernVector::point)
      .def_property_readonly("dim", &ChernVector::dimension)
      .def("numbers", &numbers_dict)
      .def("__getitem__", [](const ChernVector& a, const std::string& key) { return to_py(a[Partition::parse(key)]); })
      .def("is_zero", &ChernVector::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__mul__", [](const ChernVector& a, const py::int_& c) { return a * from_py(c); })
      .def("__rmul__", [](const ChernVector& a, const py::int_& c) { return a * from_py(c); })
      .def(py::self == py::self)
      .def("__repr__", [](const ChernVector& a) {
        return "ChernVector(dim=" + std::to_string(a.dimension()) + ", numbers=" + py::repr(numbers_dict(a)).cast<std::string>() + ")";
      });

  m.def("cp", &cp, py::arg("n"));
  m.def("product", &product);
  m.def("s_num", [](const ChernVector& a) { return to_py(s_num(a)); });
  m.def("s_omega", [](const ChernVector& a, const std::string& w) { return to_py(s_omega(a, Partition::parse(w))); });
  m.def("todd", [](const ChernVector& a) {
    const Rational t = todd(a);
    return py::module_::import("fractions").attr("Fraction")(to_py(t.get_num()), to_py(t.get_den()));
  });
  m.def("boundary", &boundary);
  m.def("boundary_k", &boundary_k, py::arg("a"), py::arg("k"));
  m.def("delta", &delta);
  m.def("psi", &psi);
  m.def("psi_k1k2", &psi_k1k2, py::arg("a"), py::arg("k1"), py::arg("k2"));
  m.def("chi", &chi);
  m.def("rho", &rho);
  m.def("stong_pi", &stong_pi);
  m.def("twisted_mul", &twisted_mul);
  m.def("in_W", &in_W);
  m.def("in_ker_boundary", &in_ker_boundary);
  m.def("c1_numbers_vanish", &c1_numbers_vanish);
  m.def("v4_class", &v4_class);
  m.def("k_class", &k_class);

  m.def(
      "chern_numbers",
      [](const std::string& family, int n1, int n2, const std::string& omega, const std::string& convention,
         const std::string& backend) {
        TowerSpec spec = with_convention(family_spec(family, n1, n2, omega), parse_convention(convention));
        return chern_numbers(spec, parse_backend(backend));
      },
      py::arg("family"), py::arg("n1") = 0, py::arg("n2") = 0, py::arg("omega") = "",
      py::arg("convention") = "toric", py::arg("backend") = "triangular");
  m.def(
      "s_number",
      [](const std::string& family, int n1, int n2, const std::string& omega) {
        return to_py(s_number(family_spec(family, n1, n2, omega)));
      },
      py::arg("family"), py::arg("n1") = 0, py::arg("n2") = 0, py::arg("omega") = "");

  m.def("cy_hypersurface", [](const std::string& w) { return cy_hypersurface(Partition::parse(w)); });
  m.def("cy_generator_combo", [](int n) { return certificate_dict(cy_generator_combo(n)); });
  m.def("quasitoric_generator_odd", [](int k) { return certificate_dict(quasitoric_generator_odd(k)); });
  m.def("quasitoric_generator_even", [](int k) { return certificate_dict(quasitoric_generator_even(k)); });
  m.def("y2_class", [] { return certificate_dict(y2_class()); });
  m.def("s6_class", &s6_class);
  m.def("construct_b", &construct_b);
  m.def("grassmann_s4", [] { return to_py(grassmann_s4()); });
  m.def(
      "cy3_criterion",
      [](long h11, long h21) {
        const auto r = cy3_criterion(h11, h21);
        py::dict d;
        d["chi"] = to_py(r.chi);
        d["s3"] = to_py(r.s3);
        d["tag"] = cy_tag_name(r.tag, 3);
        return d;
      },
      py::arg("h11"), py::arg("h21"));
  m.def(
      "cy4_invariants",
      [](long h11, long h21, long h31, std::optional<long> h22) {
        const auto r = cy4_invariants(h11, h21, h31, h22);
        py::dict d;
        d["chi1_neg"] = to_py(r.chi1_neg);
        d["c4"] = to_py(r.c4);
        d["c2sq"] = to_py(r.c2sq);
        d["chi2"] = to_py(r.chi2);
        d["h22"] = to_py(r.h22);
        d["s4"] = to_py(r.s4);
        d["tag"] = cy_tag_name(r.tag, 4);
        return d;
      },
      py::arg("h11"), py::arg("h21"), py::arg("h31"), py::arg("h22") = py::none());

  m.def("m_number", [](int i) { return to_py(m_number(i)); });
  m.def("g_number", [](int n) { return to_py(g_number(n)); });
  m.def("alpha", [](const std::string& w) { return to_py(alpha(Partition::parse(w))); });
  m.def("partition_count", [](int n) { return to_py(partition_count(n)); });
  m.def("rank_table", [](int max_n) {
    py::list rows;
    for (const auto& r : rank_table(max_n)) {
      py::dict d;
      d["dimension"] = r.dimension;
      d["rank_omega_u"] = to_py(r.rank_omega_u);
      d["rank_w"] = to_py(r.rank_w);
      d["rank_omega_su"] = to_py(r.rank_omega_su);
      d["tors_rank"] = to_py(r.tors_rank);
      d["tors_rank_odd"] = to_py(r.tors_rank_odd);
      d["hw_rank"] = to_py(r.hw_rank);
      rows.append(d);
    }
    return rows;
  });

  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
}
