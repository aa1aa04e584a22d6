#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "superlink/blocks.hpp"
#include "superlink/cli.hpp"
#include "superlink/errors.hpp"
#include "superlink/kl.hpp"
#include "superlink/oracle.hpp"
#include "superlink/root_data.hpp"
#include "superlink/weyl.hpp"
#include "superlink/whittaker.hpp"

namespace py = pybind11;
using namespace superlink;

namespace {

// Weights cross the boundary as family literals, e.g. "(-3,1|5)".
std::string fmt(const RootDatum& d, const Weight& w) { return format_weight(d, w); }

WhittakerCharacter character(const RootDatum& d, const std::vector<std::size_t>& support) {
  std::vector<std::size_t> zero_based;
  for (auto s : support) {
    if (s == 0) throw ParseError("character supports are 1-based");
    zero_based.push_back(s - 1);
  }
  return WhittakerCharacter(d, zero_based);
}

RootDatum make(const std::string& family, int m, int n, const std::string& type) {
  if (family == "gl") return build_root_datum(FamilySpec::gl(m, n));
  if (family == "osp") return build_root_datum(FamilySpec::osp2(n));
  if (family == "p") return build_root_datum(FamilySpec::p(n));
  if (family == "osp32") return build_root_datum(FamilySpec::osp32());
  if (family == "reductive") return build_root_datum(FamilySpec::reductive(parse_reductive_type(type)));
  throw ConstructionError("unknown family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_superlink, m) {
  m.doc() = "Exact weight combinatorics for Whittaker modules over Lie superalgebras";

  py::register_exception<Error>(m, "Error");
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput");

  py::class_<RootDatum>(m, "RootDatum")
      .def(py::init(&make), py::arg("family"), py::arg("m") = 0, py::arg("n") = 0, py::arg("type") = "")
      .def_readonly("name", &RootDatum::name)
      .def_readonly("dim", &RootDatum::dim)
      .def_property_readonly("rank", &RootDatum::rank)
      .def_property_readonly("rho0", [](const RootDatum& d) { return fmt(d, d.rho0); })
      .def_property_readonly("rho1", [](const RootDatum& d) { return fmt(d, d.rho1); })
      .def_property_readonly("rho", [](const RootDatum& d) { return fmt(d, d.rho); })
      .def_property_readonly("simple_even",
                             [](const RootDatum& d) {
                               std::vector<std::string> out;
                               for (const auto& r : d.simple_even) out.push_back(fmt(d, r.weight));
                               return out;
                             })
      .def("__repr__", [](const RootDatum& d) { return "RootDatum(" + d.name + ")"; });

  m.def("dot", [](const RootDatum& d, const std::string& w, const std::string& lambda) {
    return fmt(d, dot(d, parse_weyl_element(d, w), parse_weight(d, lambda)));
  });
  m.def("antidominant_rep", [](const RootDatum& d, const std::string& lambda) {
    const auto [rep, w] = antidominant_rep(d, parse_weight(d, lambda), Parabolic::full(d));
    return py::make_tuple(fmt(d, rep), w.to_cycle_string());
  });
  m.def("classify", [](const RootDatum& d, const std::string& lambda, const std::vector<std::size_t>& zeta) {
    return fmt(d, classify_simple(d, parse_weight(d, lambda), character(d, zeta)).rep);
  });
  m.def("block_label", [](const RootDatum& d, const std::string& lambda) {
    return label_to_json(block_label(d, parse_weight(d, lambda)));
  });
  m.def("same_block", [](const RootDatum& d, const std::string& a, const std::string& b) {
    return to_string(same_block(d, parse_weight(d, a), parse_weight(d, b)));
  });
  m.def("typicality_degree", [](const RootDatum& d, const std::string& lambda) -> py::object {
    const auto t = typicality(d, parse_weight(d, lambda));
    if (t.kind == Typicality::Kind::NotApplicable) return py::none();
    return py::int_(t.degree);
  });
  m.def("kl_polynomial", [](const RootDatum& d, const std::string& x, const std::string& w) {
    return kl_polynomial(d, parse_weyl_element(d, x), parse_weyl_element(d, w)).coeffs();
  });
  m.def(
      "whittaker_length",
      [](const RootDatum& d, const std::string& lambda, const std::vector<std::size_t>& zeta) {
        return whittaker_length(d, parse_weight(d, lambda), character(d, zeta), MultTable::builtin());
      },
      py::arg("datum"), py::arg("weight"), py::arg("zeta"));
  m.def(
      "validate",
      [](const RootDatum& d, const std::string& box, std::size_t jobs) {
        py::gil_scoped_release release;
        return partition_box(d, parse_box(d.dim, box), LinkageGenerators::for_family(d), true, jobs).to_json();
      },
      py::arg("datum"), py::arg("box"), py::arg("jobs") = 1);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run one command line; returns (exit_code, stdout, stderr).");
}
