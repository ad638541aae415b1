#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acceptance.hpp"
#include "rsurf/errors.hpp"
#include "rsurf/json.hpp"
#include "rsurf/roots.hpp"
#include "rsurf/tables.hpp"

namespace py = pybind11;
using namespace rsurf;

namespace {

// Structured results cross the boundary as JSON text; the Python side decodes.
std::string dump(const Json& j) { return j.dump(); }

std::vector<std::int64_t> coeffs(const HomologyClass& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact reduced-cone, symplectic mapping class and braid computations";

  auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", parse_error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("pairing", [](const std::string& x, const std::string& y) { return pairing(parse_class(x), parse_class(y)); });
  m.def("canonical_class", [](int k) { return coeffs(canonical_class(k)); });
  m.def("area", [](const std::string& w, const std::string& x) {
    return to_string(area(parse_form(w), parse_class(x)));
  });
  m.def("enumerate_roots", [](int k) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& r : enumerate_roots(k).roots) out.push_back(coeffs(r));
    return out;
  });
  m.def("positive_root_count", [](int k) { return positive_roots(k).size(); });
  m.def("reduce_class", [](const std::string& x) { return dump(to_json(reduce(parse_class(x)))); });
  m.def("reduce_form", [](const std::string& w) { return dump(to_json(reduce(parse_form(w)))); });
  m.def("is_reduced", [](const std::string& w) { return is_reduced(parse_form(w)); });
  m.def("classify_face", [](const std::string& w) { return classify_face(parse_form(w)).str(); });
  m.def("sample_face", [](int k, const std::string& label) {
    return to_string(sample_face(FaceLabel::parse(k, label)));
  });
  m.def(
      "report",
      [](const std::string& w, bool auto_reduce) {
        auto form = parse_form(w);
        if (auto_reduce) form = reduce(form).output;
        return dump(to_json(full_report(form)));
      },
      py::arg("form"), py::arg("auto_reduce") = false);
  m.def("table_markdown", [](int k) { return render_markdown(regenerate_table(k)); });
  m.def("table_matches_golden", [](int k) { return matches_golden(regenerate_table(k)); });
  m.def(
      "pure_braid_ab",
      [](int n, bool quotient) { return dump(to_json(braid::pure_braid_ab_rank(n, quotient))); },
      py::arg("n"), py::arg("quotient") = true);
  m.def("sphere_braid_ab", [](int n) {
    return dump(to_json(braid::abelianization(braid::sphere_braid_presentation(n))));
  });
  m.def(
      "verify",
      [](std::uint64_t seed) {
        acceptance::Options opt;
        opt.seed = seed;
        Json out = Json::array();
        for (const auto& r : acceptance::run_all(opt)) {
          out.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        return dump(out);
      },
      py::arg("seed") = acceptance::Options{}.seed);
}
