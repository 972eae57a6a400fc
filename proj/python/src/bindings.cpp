#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qf/classify.hpp"
#include "qf/errors.hpp"
#include "qf/group.hpp"
#include "qf/knot.hpp"
#include "qf/presentation.hpp"
#include "qf/quandle.hpp"
#include "qf/serialize.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<qf::Index>> rows_of(std::span<const qf::Index> table, std::size_t n) {
  std::vector<std::vector<qf::Index>> rows(n);
  for (std::size_t x = 0; x < n; ++x) rows[x].assign(table.begin() + x * n, table.begin() + (x + 1) * n);
  return rows;
}

qf::TwistSpinSpec twist(const std::string& knot, std::int64_t n, std::int64_t s = 1) {
  return qf::TwistSpinSpec(qf::builtin_catalog().lookup(knot), n, s);
}

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto error = py::register_exception<qf::Error>(m, "Error");
  auto domain = py::register_exception<qf::DomainError>(m, "DomainError", error.ptr());
  auto usage = py::register_exception<qf::UsageError>(m, "UsageError", error.ptr());
  py::register_exception<qf::BudgetExceeded>(m, "BudgetExceeded", domain.ptr());
  py::register_exception<qf::NotFound>(m, "NotFound", domain.ptr());
  py::register_exception<qf::NotAKnot>(m, "NotAKnot", domain.ptr());
  py::register_exception<qf::OutsideFiniteCatalog>(m, "OutsideFiniteCatalog", domain.ptr());
  py::register_exception<qf::OutsideCatalog>(m, "OutsideCatalog", domain.ptr());
  py::register_exception<qf::ParseError>(m, "ParseError", usage.ptr());

  py::class_<qf::FiniteQuandle>(m, "Quandle")
      .def(py::init([](const std::vector<std::vector<qf::Index>>& rows) {
             return qf::FiniteQuandle::from_rows(rows);
           }),
           py::arg("rows"))
      .def_static("dihedral", &qf::FiniteQuandle::dihedral)
      .def_static("trivial", &qf::FiniteQuandle::trivial)
      .def_property_readonly("order", &qf::FiniteQuandle::order)
      .def("op", &qf::FiniteQuandle::op)
      .def("rows", [](const qf::FiniteQuandle& q) { return rows_of(q.table(), q.order()); })
      .def("__len__", &qf::FiniteQuandle::order)
      .def("__eq__", [](const qf::FiniteQuandle& a, const qf::FiniteQuandle& b) { return a == b; });

  py::class_<qf::FiniteGroup>(m, "Group")
      .def(py::init([](const std::vector<std::vector<qf::Index>>& rows) {
             return qf::FiniteGroup::from_rows(rows);
           }),
           py::arg("rows"))
      .def_static("cyclic", &qf::FiniteGroup::cyclic)
      .def_property_readonly("order", &qf::FiniteGroup::order)
      .def_property_readonly("identity", &qf::FiniteGroup::identity)
      .def("mul", &qf::FiniteGroup::mul)
      .def("rows", [](const qf::FiniteGroup& g) { return rows_of(g.table(), g.order()); })
      .def("__len__", &qf::FiniteGroup::order);

  m.def("group", [](const std::string& text, std::size_t budget) {
        return qf::group_from_presentation(qf::parse_group_presentation(text), budget);
      },
      py::arg("presentation"), py::arg("budget") = qf::kDefaultBudget);

  m.def("complete", [](const std::string& text, std::size_t budget) {
        const auto r = qf::complete(qf::parse_quandle_presentation(text), budget);
        py::dict gens;
        for (const auto& [name, index] : r.generator_images) gens[py::str(name)] = index;
        return py::make_tuple(r.quandle, gens);
      },
      py::arg("presentation"), py::arg("budget") = qf::kDefaultBudget,
      "Completes a quandle presentation; returns (quandle, {generator: element}).");

  m.def("is_quandle", [](const qf::FiniteQuandle& q) { return qf::validate(q).ok; });
  m.def("type_of", &qf::type_of);
  m.def("is_connected", &qf::is_connected);
  m.def("inner_group_order", &qf::inner_group_order);
  m.def("hom_count", &qf::hom_count);
  m.def("colorings", &qf::colorings, py::arg("quandle"), py::arg("m"));
  m.def("isomorphism", &qf::isomorphic, "A bijection q1 -> q2 as a list, or None.");
  m.def("enumerate_quandles", &qf::enumerate_quandles, py::arg("order"));
  m.def("profile", [](const qf::FiniteQuandle& q) {
    return json_loads(qf::to_json(qf::invariant_profile(q)));
  });

  m.def("galex", [](const qf::FiniteGroup& g, std::uint64_t n, std::int64_t s) {
        for (const auto& f : qf::automorphisms(g))
          if (qf::automorphism_order(f) == n) return qf::galex(g, qf::power(f, s));
        throw qf::NotFound("the group has no automorphism of order " + std::to_string(n));
      },
      py::arg("group"), py::arg("n"), py::arg("s") = 1,
      "GAlex(G, f^s) for the first automorphism f of order n.");
  m.def("automorphism_orders", [](const qf::FiniteGroup& g) {
    std::vector<std::uint64_t> orders;
    for (const auto& f : qf::automorphisms(g)) orders.push_back(qf::automorphism_order(f));
    return orders;
  });

  m.def("knots", [] {
    std::vector<std::string> names;
    for (const auto& e : qf::builtin_catalog().entries()) names.push_back(e.knot.name());
    return names;
  });
  m.def("twist_spin_presentation", [](const std::string& knot, std::int64_t n) {
        return qf::to_string(qf::twist_spin_presentation(twist(knot, n)));
      },
      py::arg("knot"), py::arg("n"));
  m.def("family", [](const std::string& knot, std::int64_t n) -> std::optional<std::string> {
        const auto f = qf::finite_family(twist(knot, n));
        if (!f) return std::nullopt;
        return std::string(qf::to_string(*f));
      },
      py::arg("knot"), py::arg("n"));
  m.def("classify", [](const std::string& ka, std::int64_t na, const std::string& kb, std::int64_t nb) {
        return json_loads(qf::to_json(qf::classify(twist(ka, na), twist(kb, nb), qf::builtin_catalog())));
      },
      py::arg("knot_a"), py::arg("n_a"), py::arg("knot_b"), py::arg("n_b"));
  m.def("triple_report", [](std::int64_t p, std::int64_t q, std::int64_t r) {
        return json_loads(qf::to_json(qf::triple_report(p, q, r, qf::builtin_catalog())));
      });
}
