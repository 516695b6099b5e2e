#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hhsl2/character.hpp"
#include "hhsl2/cli.hpp"
#include "hhsl2/cohomology.hpp"
#include "hhsl2/linalg.hpp"
#include "hhsl2/module.hpp"
#include "hhsl2/verify.hpp"

namespace py = pybind11;
using namespace hhsl2;

namespace {

using CharDict = std::map<int, long long>;

Character from_dict(const CharDict& d) {
  Character c;
  for (const auto& [w, m] : d) c.add(w, m);
  return c;
}

CharDict to_dict(const Character& c) { return c.terms(); }

RestrictedLieAlgebra algebra_by_name(const std::string& name, std::uint32_t p) {
  if (name == "sl2") return sl2(p);
  if (name == "borel") return borel(p);
  if (name == "nilradical") return nilradical(p);
  throw py::value_error("algebra must be sl2, borel or nilradical");
}

Target target_by_name(const std::string& name) {
  if (name == "g1") return Target::G1;
  if (name == "b1") return Target::B1;
  if (name == "u1") return Target::U1;
  throw py::value_error("target must be g1, b1 or u1");
}

Matrix matrix_from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p) {
  return Matrix::from_rows(PrimeField(p), rows);
}

std::vector<std::vector<Scalar>> to_rows(const Matrix& m) {
  std::vector<std::vector<Scalar>> out(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

py::list summands_list(const Decomposition& d) {
  py::list out;
  for (const auto& s : d.summands)
    out.append(py::make_tuple(summand_label(s.family, s.highest_weight), s.multiplicity));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cohomology of first Frobenius kernels of SL2 and its Borel and unipotent subgroups";

  m.def("rank", [](const std::vector<std::vector<long long>>& rows, std::uint32_t p) {
    return rank(matrix_from_rows(rows, p));
  }, py::arg("rows"), py::arg("p"));
  m.def("kernel_basis", [](const std::vector<std::vector<long long>>& rows, std::uint32_t p) {
    return kernel_basis(matrix_from_rows(rows, p));
  }, py::arg("rows"), py::arg("p"));

  m.def("weyl_chi", [](int l) { return to_dict(weyl_chi(l)); }, py::arg("weight"));
  m.def("simple_char", [](int l, std::uint32_t p) { return to_dict(simple_char(l, p)); }, py::arg("weight"), py::arg("p"));
  m.def("tilting_char", [](int l, std::uint32_t p) { return to_dict(tilting_char(l, p)); }, py::arg("weight"), py::arg("p"));

  m.def("decompose", [](const CharDict& c, std::uint32_t p, const std::string& kind) {
    const Character ch = from_dict(c);
    Decomposition d;
    if (kind == "nabla") d = decompose_nabla(ch);
    else if (kind == "tilting") d = decompose_tilting_greedy(ch, p);
    else if (kind == "simple") d = decompose_simples(ch, p);
    else if (kind == "tilting_or_simple") d = appendix_order(decompose_tilting_or_simple(ch, p));
    else throw py::value_error("kind must be nabla, tilting, simple or tilting_or_simple");
    return py::make_tuple(summands_list(d), to_dict(d.remainder));
  }, py::arg("character"), py::arg("p"), py::arg("kind") = "tilting_or_simple",
     "Returns (summands as (label, multiplicity) pairs, remainder character).");

  py::class_<WeightModule>(m, "WeightModule")
      .def_property_readonly("p", &WeightModule::p)
      .def_property_readonly("dim", &WeightModule::dim)
      .def_property_readonly("weights", &WeightModule::weights)
      .def_property_readonly("labels", &WeightModule::labels)
      .def_property_readonly("character", [](const WeightModule& w) { return to_dict(w.character()); })
      .def("action", [](const WeightModule& w, const std::string& g) {
        for (Gen x : kAllGens)
          if (gen_name(x) == g) return to_rows(w.action(x));
        throw py::value_error("generator must be e, h or f");
      }, py::arg("generator"))
      .def("violations", [](const WeightModule& w) { return module_violations(w); })
      .def("__len__", &WeightModule::dim)
      .def("__repr__", [](const WeightModule& w) {
        return "<WeightModule p=" + std::to_string(w.p()) + " dim=" + std::to_string(w.dim()) + ">";
      });

  m.def("truncated_sym", [](const std::string& a, std::uint32_t p, int n) { return truncated_sym(algebra_by_name(a, p), n); },
        py::arg("algebra"), py::arg("p"), py::arg("n"));
  m.def("sym_power", [](const std::string& a, std::uint32_t p, int n) { return sym_power(algebra_by_name(a, p), n); },
        py::arg("algebra"), py::arg("p"), py::arg("n"));
  m.def("simple_model", &simple_model, py::arg("weight"), py::arg("p"));
  m.def("trivial_module", &trivial_module, py::arg("p"));
  m.def("block_projection_principal", &block_projection_principal, py::arg("module"));
  m.def("g1_invariants", &g1_invariants, py::arg("module"));
  m.def("module_hom_dim", &module_hom_dim, py::arg("source"), py::arg("target"));
  m.def("duality_pairing_rank", [](const std::string& a, std::uint32_t p, int i) {
    return duality_pairing_rank(algebra_by_name(a, p), i);
  }, py::arg("algebra"), py::arg("p"), py::arg("i"));

  m.def("u_cohomology", [](const WeightModule& w, int j) { return to_dict(u_cohomology(w, j)); }, py::arg("module"), py::arg("j"));
  m.def("u1_cohomology", [](const WeightModule& w, int n) { return to_dict(u1_cohomology(w, n)); }, py::arg("module"), py::arg("n"));
  m.def("b1_cohomology", [](const WeightModule& w, int n) { return to_dict(b1_cohomology(w, n)); }, py::arg("module"), py::arg("n"));
  m.def("g1_cohomology_char", [](const WeightModule& w, int n) {
    const auto r = g1_cohomology_char(w, n);
    return py::make_tuple(to_dict(r.character), r.dominant);
  }, py::arg("module"), py::arg("n"), "Returns (character, exact) where exact means no higher induction.");
  m.def("ip_expected_dims", &ip_expected_dims, py::arg("p"), py::arg("maxdeg"));
  m.def("collapse_check", [](const WeightModule& w, int maxdeg) {
    py::list out;
    for (const auto& row : collapse_check(w, maxdeg)) {
      py::dict d;
      d["degree"] = row.degree;
      d["e2_total"] = row.e2_total;
      d["actual"] = row.actual;
      d["defect"] = row.defect;
      out.append(d);
    }
    return out;
  }, py::arg("module"), py::arg("maxdeg"));

  m.def("hh_table", [](const std::string& target, std::uint32_t p, int maxdeg) {
    const auto t = hh_table(target_by_name(target), p, maxdeg);
    py::list out;
    for (const auto& e : t.entries) {
      py::dict d;
      d["n"] = e.n;
      d["degree"] = e.degree;
      d["character"] = to_dict(e.character);
      d["exact"] = e.exact;
      out.append(d);
    }
    return out;
  }, py::arg("target"), py::arg("p"), py::arg("maxdeg") = 8);

  m.def("verify_appendix_json", [](std::uint32_t p, int maxdeg, bool use_fixture) {
    py::gil_scoped_release release;
    return verify_appendix(p, maxdeg, use_fixture).to_json(false);
  }, py::arg("p"), py::arg("maxdeg") = 8, py::arg("use_fixture") = true);
  m.def("verify_propositions_json", [](std::uint32_t p) {
    py::gil_scoped_release release;
    return verify_propositions(p).to_json(false);
  }, py::arg("p"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line driver; returns (exit code, stdout, stderr).");

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
}
