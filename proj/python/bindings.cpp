#include <memory>
#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsbmaps/brauer.hpp"
#include "gsbmaps/commands.hpp"
#include "gsbmaps/error.hpp"
#include "gsbmaps/instance.hpp"
#include "gsbmaps/maps.hpp"
#include "gsbmaps/motives.hpp"
#include "gsbmaps/reduction.hpp"

namespace py = pybind11;
using namespace gsb;

namespace {

// pybind11 holders cannot be shared_ptr<const T>.
using MutModel = std::shared_ptr<BrauerGroupModel>;

MutModel unconst(const ModelPtr& m) { return std::const_pointer_cast<BrauerGroupModel>(m); }

void decisions(const GSBProduct& target, const std::vector<FactorDecision>& ds, py::list& out) {
  for (const FactorDecision& d : ds) {
    py::dict e;
    e["factor"] = to_string(target[d.factor]);
    e["reduced_index"] = d.reduced_index;
    e["witness"] = d.witness;
    e["has_point"] = d.has_point;
    out.append(e);
  }
}

py::dict report_dict(const RationalMapReport& r, const GSBProduct& a, const GSBProduct& b) {
  py::dict d;
  d["forward"] = r.forward;
  py::list fwd;
  decisions(b, r.forward_factors, fwd);
  d["forward_factors"] = fwd;
  if (r.backward) {
    d["backward"] = *r.backward;
    py::list bwd;
    decisions(a, r.backward_factors, bwd);
    d["backward_factors"] = bwd;
  }
  d["holds"] = r.holds();
  return d;
}

py::object as_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rational maps between products of generalized Severi-Brauer varieties and their upper motives";

  auto base_error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base_error);
  auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base_error);
  py::register_exception<ModelMismatch>(m, "ModelMismatch", pre);
  py::register_exception<UnsupportedModel>(m, "UnsupportedModel", pre);
  py::register_exception<InvariantError>(m, "InvariantError", base_error);

  py::class_<BrauerGroupModel, MutModel>(m, "BrauerGroupModel")
      .def(py::init([](Int prime, std::vector<Int> orders) {
             return std::make_shared<BrauerGroupModel>(prime, std::move(orders));
           }),
           py::arg("prime"), py::arg("orders"))
      .def_property_readonly("prime", &BrauerGroupModel::prime)
      .def_property_readonly("orders", [](const BrauerGroupModel& g) {
        return std::vector<Int>(g.orders().begin(), g.orders().end());
      })
      .def_property_readonly("size", &BrauerGroupModel::size)
      .def("__eq__", [](const BrauerGroupModel& a, const BrauerGroupModel& b) { return a == b; });

  py::class_<BrauerClass>(m, "BrauerClass")
      .def(py::init([](const MutModel& g, std::vector<Int> e) { return BrauerClass(g, std::move(e)); }),
           py::arg("model"), py::arg("exponents"))
      .def_property_readonly("model", [](const BrauerClass& c) { return unconst(c.model()); })
      .def_property_readonly("exponents", [](const BrauerClass& c) {
        return std::vector<Int>(c.exponents().begin(), c.exponents().end());
      })
      .def("is_zero", &BrauerClass::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__rmul__", [](const BrauerClass& c, Int k) { return k * c; })
      .def("__mul__", [](const BrauerClass& c, Int k) { return k * c; })
      .def("__eq__", [](const BrauerClass& a, const BrauerClass& b) { return a == b; })
      .def("__hash__", [](const BrauerClass& c) {
        return py::hash(py::tuple(py::cast(std::vector<Int>(c.exponents().begin(), c.exponents().end()))));
      })
      .def("__repr__", [](const BrauerClass& c) { return "BrauerClass" + to_string(c); });

  m.def("combine", [](const std::vector<std::pair<BrauerClass, Int>>& terms) {
    std::vector<Term> ts;
    for (const auto& [c, k] : terms) ts.push_back({c, k});
    return combine(ts);
  });
  m.def("class_exponent", &class_exponent);
  m.def("generic_index", &generic_index);
  m.def("subgroup_generated", [](const MutModel& g, const std::vector<BrauerClass>& cs) {
    return subgroup_generated(g, cs).elements();
  });
  m.def("subgroups_equal", [](const MutModel& g, const std::vector<BrauerClass>& a,
                              const std::vector<BrauerClass>& b) {
    return subgroups_equal(subgroup_generated(g, a), subgroup_generated(g, b));
  });

  py::class_<AlgebraSpec>(m, "AlgebraSpec")
      .def(py::init<BrauerClass, Int, std::string>(), py::arg("cls"), py::arg("degree_exponent"),
           py::arg("label") = "")
      .def_static("of_class", &AlgebraSpec::of_class, py::arg("cls"), py::arg("label") = "")
      .def_property_readonly("cls", &AlgebraSpec::cls)
      .def_property_readonly("degree_exponent", &AlgebraSpec::degree_exponent)
      .def_property_readonly("degree", &AlgebraSpec::degree)
      .def_property_readonly("exponent", &AlgebraSpec::exponent)
      .def_property_readonly("name", &AlgebraSpec::name)
      .def("__repr__", [](const AlgebraSpec& a) { return "AlgebraSpec(" + a.name() + ")"; });

  py::class_<GSBFactor>(m, "GSBFactor")
      .def(py::init<AlgebraSpec, Int>(), py::arg("algebra"), py::arg("k"))
      .def_property_readonly("algebra", &GSBFactor::algebra)
      .def_property_readonly("k", &GSBFactor::k)
      .def_property_readonly("reduced_dimension", &GSBFactor::reduced_dimension)
      .def("__repr__", [](const GSBFactor& f) { return to_string(f); });

  py::class_<GSBProduct>(m, "GSBProduct")
      .def(py::init<std::vector<GSBFactor>>(), py::arg("factors"))
      .def_property_readonly("factors", &GSBProduct::factors)
      .def("__len__", &GSBProduct::size)
      .def("__repr__", [](const GSBProduct& x) { return to_string(x); });

  m.def("vp", &vp, py::arg("n"), py::arg("p"));
  m.def("mu", [](const AlgebraSpec& d, const GSBProduct& x, const std::vector<Int>& i) { return mu(d, x, i); });
  m.def("reduced_index", [](const AlgebraSpec& d, const GSBProduct& x) {
    IndexReduction r = reduced_index(d, x);
    return py::make_tuple(r.index, r.witness);
  });
  m.def("has_rational_point_over", &has_rational_point_over);
  m.def("exists_rational_map", [](const GSBProduct& a, const GSBProduct& b) {
    return report_dict(exists_rational_map(a, b), a, b);
  });
  m.def("equivalent", [](const GSBProduct& a, const GSBProduct& b) {
    return report_dict(equivalent(a, b), a, b);
  });
  m.def("classical_criterion", [](const std::vector<AlgebraSpec>& l, const std::vector<AlgebraSpec>& r) {
    return classical_criterion(l, r);
  });
  m.def("lemma_witness", &lemma_witness);
  m.def("prodexp_criterion",
        [](const std::vector<AlgebraSpec>& l, const std::vector<AlgebraSpec>& r, Int k) -> py::object {
          auto w = prodexp_criterion(l, r, k);
          if (!w) return py::none();
          return py::make_tuple(w->alpha, w->beta);
        });
  m.def("dimension", &dimension);

  m.def("upper_motive", [](const GSBProduct& x) { return to_string(upper_motive(x)); });
  m.def("motives_isomorphic", [](const GSBProduct& a, const GSBProduct& b) {
    return motives_isomorphic(upper_motive(a), upper_motive(b));
  });
  m.def("classify_single", &classify_single);
  m.def("compare_families", [](const std::vector<AlgebraSpec>& l, const std::vector<AlgebraSpec>& r) {
    FamilyComparison c = compare_families(l, r);
    py::dict d;
    d["verdict"] = std::string(to_string(c.verdict));
    py::list shared;
    for (const MotivePair& p : c.shared) shared.append(py::make_tuple(to_string(p.left), to_string(p.right)));
    d["shared"] = shared;
    d["separating"] = c.separating ? py::object(py::str(to_string(*c.separating))) : py::none();
    d["separating_side"] = c.separating_side == Side::Left ? "left" : "right";
    return d;
  });

  py::class_<Instance>(m, "Instance")
      .def_static("load", [](const std::string& path) { return parse_instance_file(path); })
      .def_static("from_json", [](const std::string& text) { return parse_instance_json(text); })
      .def_static("example", [](int which) {
        if (which != 1 && which != 2) throw PreconditionError("bundled examples are 1 and 2");
        return parse_instance_json(which == 1 ? fixture_ex1() : fixture_ex2());
      })
      .def_property_readonly("model", [](const Instance& i) { return unconst(i.model()); })
      .def_property_readonly("algebra_names", [](const Instance& i) {
        std::vector<std::string> out;
        for (const auto& [n, _] : i.algebras()) out.push_back(n);
        return out;
      })
      .def("algebra", &Instance::algebra, py::return_value_policy::copy)
      .def("algebras", [](const Instance& i, const std::string& names) { return i.algebra_list(names); })
      .def("product", &Instance::product)
      .def("index", [](const Instance& i, const std::vector<std::string>& names) {
        return as_python(index_report(i, names).json);
      })
      .def("exponent", [](const Instance& i, const std::vector<std::string>& names) {
        return as_python(exponent_report(i, names).json);
      })
      .def("subgroup", [](const Instance& i, const std::string& gens, std::optional<std::string> cmp) {
        return as_python(subgroup_report(i, gens, cmp).json);
      }, py::arg("generators"), py::arg("compare") = py::none())
      .def("reduced_index", [](const Instance& i, const std::string& t, const std::string& b) {
        return as_python(reduced_index_report(i, t, b).json);
      }, py::arg("target"), py::arg("base"))
      .def("rational_map", [](const Instance& i, const std::string& s, const std::string& t) {
        return as_python(rational_map_report(i, s, t).json);
      }, py::arg("source"), py::arg("target"))
      .def("equivalent", [](const Instance& i, const std::string& l, const std::string& r) {
        return as_python(equivalent_report(i, l, r).json);
      }, py::arg("left"), py::arg("right"))
      .def("motive_iso", [](const Instance& i, const std::string& l, const std::string& r) {
        return as_python(motive_iso_report(i, l, r).json);
      }, py::arg("left"), py::arg("right"))
      .def("compare_families", [](const Instance& i, const std::string& l, const std::string& r) {
        return as_python(compare_families_report(i, l, r).json);
      }, py::arg("left"), py::arg("right"));

  m.def("verify_examples", [] { return as_python(verify_examples().report.json); });
}
