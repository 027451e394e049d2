#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hspecht/cli.hpp"
#include "hspecht/verify.hpp"

namespace py = pybind11;
using namespace hspecht;

namespace {

MultiTableau tableau_arg(const std::string& blocks, const std::string& text) {
  return parse_multi_tableau(text, parse_blocks(blocks));
}

}  // namespace

PYBIND11_MODULE(_hspecht, m) {
  m.doc() = "Higher Specht polynomials for products of symmetric groups";

  static py::exception<Falsification> falsification(m, "Falsification", PyExc_RuntimeError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  m.def("word", [](const std::string& blocks, const std::string& tableau) {
    return word(tableau_arg(blocks, tableau)).letters;
  }, py::arg("blocks"), py::arg("tableau"));

  m.def("index_tableau", [](const std::string& blocks, const std::string& tableau, bool per_block) {
    const auto t = tableau_arg(blocks, tableau);
    return to_string(per_block ? block_index_tableau(t) : index_tableau(t));
  }, py::arg("blocks"), py::arg("tableau"), py::arg("per_block") = false);

  m.def("tableaux", [](const std::string& blocks, const std::string& diagram, const std::string& kind) {
    const auto d = parse_diagram(diagram, parse_blocks(blocks));
    if (kind != "nst" && kind != "st") throw InvalidInput("unknown tableau kind '" + kind + "'");
    std::vector<std::string> out;
    for (const auto& t : kind == "nst" ? enumerate_NST(d) : enumerate_ST(d)) out.push_back(to_string(t));
    return out;
  }, py::arg("blocks"), py::arg("diagram"), py::arg("kind") = "nst");

  m.def("diagrams", [](const std::string& blocks) {
    std::vector<std::string> out;
    for (const auto& d : enumerate_r_diagrams(parse_blocks(blocks))) out.push_back(to_string(d));
    return out;
  }, py::arg("blocks"));

  m.def("higher_specht", [](const std::string& blocks, const std::string& T, const std::string& S) {
    return to_string(higher_specht(tableau_arg(blocks, T), tableau_arg(blocks, S)));
  }, py::arg("blocks"), py::arg("T"), py::arg("S"));

  m.def("classical_specht", [](const std::string& blocks, const std::string& T) {
    return to_string(classical_specht(tableau_arg(blocks, T)));
  }, py::arg("blocks"), py::arg("T"));

  m.def("decompose_json", [](const std::string& blocks, const std::string& poly) {
    const auto block = parse_blocks(blocks);
    return to_json(decompose(block, parse_polynomial(poly, block.total()))).dump();
  }, py::arg("blocks"), py::arg("poly"));

  m.def("graded_rank_series", [](const std::string& blocks, int max_degree) {
    return graded_rank_series(parse_blocks(blocks), max_degree).coefficients;
  }, py::arg("blocks"), py::arg("max_degree"));

  m.def("apply_operator", [](const std::string& op, const std::string& poly, int n) {
    return to_string(apply_operator(parse_operator(op, n), parse_polynomial(poly, n)));
  }, py::arg("op"), py::arg("poly"), py::arg("n"));

  m.def("verify_json", [](const std::string& blocks, const std::string& suite, int max_degree, int samples,
                          unsigned seed) {
    VerifyOptions options;
    options.max_degree = max_degree;
    options.samples = samples;
    options.seed = seed;
    VerifyReport report;
    {
      py::gil_scoped_release release;
      report = run_suite(parse_blocks(blocks), suite, options);
    }
    return to_json(report).dump();
  }, py::arg("blocks"), py::arg("suite") = "all", py::arg("max_degree") = 4, py::arg("samples") = 100,
     py::arg("seed") = VerifyOptions{}.seed);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, py::arg("args"));
}
