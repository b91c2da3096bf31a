#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "altknot/cli.hpp"
#include "altknot/diagram_io.hpp"
#include "altknot/families.hpp"
#include "altknot/polynomials.hpp"
#include "altknot/spectra.hpp"
#include "altknot/surgery.hpp"

namespace py = pybind11;
using namespace altknot;

namespace {

// Ascending coefficients as Python ints.
py::list coeffs(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(py::int_(py::str(c.get_str())));
  return out;
}

IntPoly from_coeffs(const std::vector<py::int_>& cs) {
  std::vector<mpz_class> v;
  for (const auto& c : cs) v.emplace_back(py::str(c).cast<std::string>());
  return IntPoly(std::move(v));
}

AdjMatrix to_matrix(const std::vector<std::vector<int>>& rows) { return AdjMatrix::from_rows(rows); }

}  // namespace

PYBIND11_MODULE(_altknot, m) {
  m.doc() = "Alternating knot diagrams and their adjacency polynomials";

  py::class_<Diagram>(m, "Diagram")
      .def_static("from_json", &diagram_from_json)
      .def("to_json", [](const Diagram& d) { return diagram_to_json(d); })
      .def("to_dot", [](const Diagram& d) { return diagram_to_dot(d); })
      .def_property_readonly("vertex_count", &Diagram::vertex_count)
      .def_property_readonly("edge_count", &Diagram::edge_count)
      .def_property_readonly("kind", [](const Diagram& d) { return std::string(to_string(d.kind())); })
      .def("loop_count", &Diagram::loop_count)
      .def("edges", &Diagram::edges)
      .def("adjacency", [](const Diagram& d) { return adjacency(d).rows(); })
      .def("is_valid", [](const Diagram& d) { return validate(d).ok(); })
      .def("violations", [](const Diagram& d) {
        std::vector<std::string> out;
        for (const auto& v : validate(d).violations) out.push_back(v.rule);
        return out;
      })
      .def("face_census", [](const Diagram& d) { return faces(d).census.counts; })
      .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; });

  py::enum_<Lane>(m, "Lane").value("OUT", Lane::Out).value("IN", Lane::In);

  m.def("generate", [](const std::string& spec) { return generate(parse_family_spec(spec)); },
        "Family member from a spec such as 'cyclic:V=5'");
  m.def("closed_form", [](const std::string& spec) { return coeffs(closed_form(parse_family_spec(spec))); });
  m.def("verify_member", [](const std::string& spec) {
    const MemberCheck c = verify_member(parse_family_spec(spec));
    return py::make_tuple(c.match, coeffs(c.generated), coeffs(c.formula));
  });
  m.def("charpoly", [](const Diagram& d) { return coeffs(charpoly(adjacency(d))); });
  m.def("charpoly_matrix", [](const std::vector<std::vector<int>>& rows) { return coeffs(charpoly(to_matrix(rows))); });
  m.def("poly_to_string", [](const std::vector<py::int_>& cs) { return from_coeffs(cs).to_string(); });
  m.def("jpoly", [](int k) { return coeffs(jpoly(k)); });
  m.def("components", [](const std::vector<std::vector<int>>& rows) { return trace_strands(to_matrix(rows)).count(); });
  m.def("decompositions", [](const std::vector<std::vector<int>>& rows) {
    std::vector<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> out;
    for (const auto& p : permutation_decompositions(to_matrix(rows))) out.emplace_back(p.first.rows(), p.second.rows());
    return out;
  });

  m.def("expand_vertex", &expand_vertex);
  m.def("contract_bigon", &contract_bigon);
  m.def("eliminate_crossing", [](const Diagram& d, int v, Lane lane) {
    const Elimination e = eliminate_crossing(d, v, lane);
    return py::make_tuple(e.diagram, e.free_circles);
  });
  m.def("compose_twist", &compose_twist);
  m.def("isomorphic", &isomorphic);

  m.def("check_family_recurrence", [](const std::vector<py::int_>& p0, const std::vector<py::int_>& p1,
                                      const std::vector<py::int_>& p2) {
    const RecurrenceCheck r = check_family_recurrence(from_coeffs(p0), from_coeffs(p1), from_coeffs(p2));
    return py::make_tuple(r.homogeneous, r.source ? py::object(coeffs(*r.source)) : py::object(py::none()));
  });
  m.def("check_identities", [](int max_index) {
    std::vector<std::tuple<std::string, std::string, bool>> out;
    for (const auto& c : check_identities(max_index)) out.emplace_back(c.identity, c.params, c.pass);
    return out;
  });
  m.def("lookup", [](const std::string& label) {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& e : lookup(label)) out.emplace_back(to_string(e.family), e.flags);
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
