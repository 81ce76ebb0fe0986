#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gds/certify.hpp"
#include "gds/cli.hpp"
#include "gds/corpus.hpp"
#include "gds/error.hpp"
#include "gds/gauge.hpp"
#include "gds/homology.hpp"
#include "gds/io.hpp"
#include "gds/subdivision.hpp"

namespace py = pybind11;
using namespace gds;

namespace {

py::dict chain_terms(const Chain& c) {
  py::dict d;
  for (const auto& [s, coeff] : c.terms()) d[py::tuple(py::cast(s))] = coeff;
  return d;
}

py::dict poly_terms(const PhasePolynomial& p) {
  py::dict d;
  for (const auto& [m, coeff] : p.terms()) d[py::tuple(py::cast(m))] = coeff;
  return d;
}

}  // namespace

PYBIND11_MODULE(_gdsdual, m) {
  m.doc() = "Simplicial complexes, GDS disentanglers, cochain circuits and their certificates";

  auto base_error = py::register_exception<Error>(m, "GdsError");
  py::register_exception<MalformedInput>(m, "MalformedInput", base_error.ptr());
  py::register_exception<NotFound>(m, "NotFound", base_error.ptr());
  py::register_exception<ContractViolation>(m, "ContractViolation", base_error.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base_error.ptr());
  py::register_exception<InternalError>(m, "InternalError", base_error.ptr());

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init([](const std::vector<Simplex>& facets) { return build_complex(facets); }), py::arg("facets"))
      .def_property_readonly("dim", &SimplicialComplex::dim)
      .def_property_readonly("vertices", &SimplicialComplex::vertices)
      .def_property_readonly("facets", &SimplicialComplex::facets)
      .def("simplices", &SimplicialComplex::simplices, py::arg("k"))
      .def("f_vector", &SimplicialComplex::f_vector)
      .def("euler_characteristic", [](const SimplicialComplex& s) { return euler_characteristic(s); })
      .def("betti_numbers", [](const SimplicialComplex& s) { return betti_numbers(s); })
      .def("is_manifold", [](const SimplicialComplex& s) { return manifold_check(s).is_manifold(); })
      .def("link", [](const SimplicialComplex& s, const Simplex& sigma) { return link(s, sigma); })
      .def("to_text", [](const SimplicialComplex& s) { return format_complex(s); })
      .def_static("from_text", [](const std::string& text) { return parse_complex(text); })
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& s) {
        return "<SimplicialComplex dim=" + std::to_string(s.dim()) + " vertices=" +
               std::to_string(s.vertices().size()) + ">";
      });

  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const auto& e : corpus()) names.push_back(e.name);
    return names;
  });
  m.def("corpus_complex", [](const std::string& name) { return corpus_entry(name).complex(); }, py::arg("name"));

  py::class_<Chain>(m, "Chain")
      .def(py::init<int, Coeff>(), py::arg("dim"), py::arg("modulus") = 0)
      .def("add", [](Chain& c, const std::vector<Vertex>& s, Coeff coeff) { c.add(s, coeff); }, py::arg("simplex"),
           py::arg("coeff") = 1)
      .def_property_readonly("dim", &Chain::dim)
      .def_property_readonly("modulus", &Chain::modulus)
      .def("terms", &chain_terms)
      .def("mod", &Chain::mod)
      .def("boundary", [](const Chain& c) { return boundary(c); })
      .def("to_text", [](const Chain& c) { return format_chain(c); })
      .def_static("from_text", [](const std::string& text) { return parse_chain(text); })
      .def("__len__", &Chain::size)
      .def("__eq__", [](const Chain& a, const Chain& b) { return a == b; })
      .def("__add__", [](const Chain& a, const Chain& b) { return a + b; })
      .def("__sub__", [](const Chain& a, const Chain& b) { return a - b; });

  py::class_<HomologyWitness>(m, "HomologyWitness")
      .def_property_readonly("trivial", &HomologyWitness::trivial)
      .def_readonly("target", &HomologyWitness::target)
      .def_readonly("witness", &HomologyWitness::witness)
      .def_readonly("cocycle", &HomologyWitness::cocycle);
  m.def("homology_solve", &homology_solve, py::arg("complex"), py::arg("chain"));

  py::class_<BarycentricComplex>(m, "BarycentricComplex")
      .def_readonly("base", &BarycentricComplex::base)
      .def_readonly("derived", &BarycentricComplex::derived)
      .def_readonly("labels", &BarycentricComplex::labels)
      .def("id_of", &BarycentricComplex::id_of)
      .def("vertex_name", &BarycentricComplex::vertex_name);
  m.def("barycentric", &barycentric, py::arg("complex"));
  m.def("halperin_toledo_chain", &halperin_toledo_chain, py::arg("b"), py::arg("k"));
  m.def("sw_class", &sw_class, py::arg("b"), py::arg("k"));

  py::class_<PhasePolynomial>(m, "PhasePolynomial")
      .def(py::init<int>(), py::arg("precision") = 1)
      .def("add", &PhasePolynomial::add, py::arg("monomial"), py::arg("coeff"))
      .def_property_readonly("precision", &PhasePolynomial::precision)
      .def("terms", &poly_terms)
      .def("is_constant", &PhasePolynomial::is_constant)
      .def("constant_term", &PhasePolynomial::constant_term)
      .def("evaluate", [](const PhasePolynomial& p, std::vector<Vertex> down) {
        std::sort(down.begin(), down.end());
        return p.evaluate(down);
      })
      .def("to_text", [](const PhasePolynomial& p) { return format_polynomial(p); })
      .def_static("from_text", [](const std::string& text) { return parse_polynomial(text); })
      .def("__len__", &PhasePolynomial::size)
      .def("__eq__", [](const PhasePolynomial& a, const PhasePolynomial& b) { return a == b; })
      .def("__add__", [](const PhasePolynomial& a, const PhasePolynomial& b) { return a + b; })
      .def("__sub__", [](const PhasePolynomial& a, const PhasePolynomial& b) { return a - b; });
  m.def("gds_disentangler", &gds_disentangler, py::arg("complex"), py::arg("precision") = 1);
  m.def("flip_commutator", &flip_commutator, py::arg("poly"));
  m.def("omega_circuit_poly", &omega_circuit_poly, py::arg("chain"), py::arg("precision") = 1);

  py::class_<CochainCircuitDescriptor>(m, "CochainCircuitDescriptor")
      .def_readonly("chains", &CochainCircuitDescriptor::chains)
      .def_readonly("global_phase", &CochainCircuitDescriptor::global_phase)
      .def_readonly("boundaries", &CochainCircuitDescriptor::boundaries)
      .def("symmetric", &CochainCircuitDescriptor::symmetric)
      .def("symmetric_up_to_phase", &CochainCircuitDescriptor::symmetric_up_to_phase)
      .def("gate_count", &CochainCircuitDescriptor::gate_count);
  m.def("decompose", &decompose, py::arg("poly"));
  m.def("recompose", &recompose, py::arg("descriptor"), py::arg("precision") = 1);

  py::class_<GroupCochain>(m, "GroupCochain")
      .def(py::init<int, std::int64_t>(), py::arg("arity"), py::arg("modulus"))
      .def_property_readonly("arity", &GroupCochain::arity)
      .def_property_readonly("modulus", &GroupCochain::modulus)
      .def("value", py::overload_cast<const std::vector<bool>&>(&GroupCochain::value, py::const_))
      .def("table", &GroupCochain::table)
      .def("is_homogeneous", &GroupCochain::is_homogeneous)
      .def("is_zero", &GroupCochain::is_zero)
      .def("half_lift", &GroupCochain::half_lift)
      .def("lifted", &GroupCochain::lifted)
      .def("__eq__", [](const GroupCochain& a, const GroupCochain& b) { return a == b; });
  m.def("omega", &omega, py::arg("k"));
  m.def("coboundary", &coboundary, py::arg("w"));

  m.def("dual_amplitude", &dual_amplitude, py::arg("complex"), py::arg("spins"));
  m.def("gauged_amplitudes", [](const SimplicialComplex& s) {
    std::vector<std::tuple<std::string, long long, long long>> out;
    for (const auto& r : trivial_sector_amplitudes(s)) out.emplace_back(format_bits(r.z), r.amplitude, r.wall_euler);
    return out;
  });

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("claim", &Certificate::claim)
      .def_readonly("subject", &Certificate::subject)
      .def_readonly("input_digest", &Certificate::input_digest)
      .def_readonly("notes", &Certificate::notes)
      .def_readonly("precondition_failure", &Certificate::precondition_failure)
      .def_property_readonly("passed", &Certificate::passed)
      .def_property_readonly("evidence_count", [](const Certificate& c) { return c.evidence.size(); })
      .def("recheck", &Certificate::recheck)
      .def("to_text", [](const Certificate& c) { return render_text(c); })
      .def("to_json", [](const Certificate& c) { return render_json(c); });
  m.def("certify_cochain_equals_gds", [](const SimplicialComplex& s) { return certify_cochain_equals_gds(barycentric(s)); });
  m.def("certify_wtr", [](const SimplicialComplex& s) { return certify_wtr(barycentric(s)); });
  m.def("certify_wotr", [](const SimplicialComplex& s) { return certify_wotr(barycentric(s)); });
  m.def("certify_rg", [](const SimplicialComplex& s) { return certify_rg(s, {}); });
  m.def("certify_omega", [] { return certify_omega(); });
  m.def("verify_ocdual", [](const SimplicialComplex& s) { return verify_ocdual(s); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = cli::run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Runs a gdsctl command line; returns (status, stdout, stderr).");
}
