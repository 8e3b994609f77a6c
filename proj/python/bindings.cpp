#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betaorbit/dynamics.hpp"
#include "betaorbit/errors.hpp"
#include "betaorbit/mechanical.hpp"
#include "betaorbit/orbit.hpp"
#include "betaorbit/palindromes.hpp"

namespace py = pybind11;
using namespace betaorbit;

namespace {

py::dict orbit_dict(const OrbitResult& r) {
  py::dict d;
  d["freq"] = to_string(r.frequency);
  d["case"] = std::string(to_string(r.case_tag));
  d["generator"] = r.generator.to_string();
  d["a"] = r.a;
  d["b"] = r.b;
  py::list cert;
  for (const auto& c : r.certificate) cert.append(py::make_tuple(c.left, c.relation, c.right));
  d["certificate"] = cert;
  return d;
}

py::tuple real_tuple(const RealValue& v, int digits) {
  return py::make_tuple(v.to_string(digits), v.to_decimal(digits), v.repr_tag(digits));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Beta-expansions and invariant orbit closures of the beta-bar transformation";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", PyExc_ArithmeticError);
  py::register_exception<Undetermined>(m, "Undetermined", PyExc_ArithmeticError);

  m.def("bar_expansion",
        [](const std::string& beta, const std::string& x, std::size_t n) {
          return expand(parse_real(x), BetaNumber::parse(beta), ExpansionKind::Bar).prefix(n).to_string();
        },
        py::arg("beta"), py::arg("x") = "1", py::arg("n") = 32);

  m.def("freq",
        [](const std::string& beta, std::size_t max_depth) {
          FreqResult f;
          {
            py::gil_scoped_release release;
            f = freq_of_beta(BetaNumber::parse(beta), max_depth);
          }
          if (f.orbit) return orbit_dict(*f.orbit);
          py::dict d;
          d["freq"] = to_string(f.frequency);
          d["case"] = "integer";
          return d;
        },
        py::arg("beta"), py::arg("max_depth") = kDefaultMaxDepth);

  m.def("undetermined_bounds",
        [](const std::string& beta, std::size_t max_depth) -> py::object {
          try {
            freq_of_beta(BetaNumber::parse(beta), max_depth);
          } catch (const Undetermined& u) {
            return py::make_tuple(to_string(u.lo()), to_string(u.hi()));
          }
          return py::none();
        },
        py::arg("beta"), py::arg("max_depth") = kDefaultMaxDepth,
        "Frequency enclosure when the case analysis stops at max_depth, else None.");

  m.def("locate",
        [](const std::string& beta, const std::string& t, std::size_t max_depth) {
          return orbit_dict(locate_orbit(parse_real(t), BetaNumber::parse(beta), max_depth));
        },
        py::arg("beta"), py::arg("t"), py::arg("max_depth") = kDefaultMaxDepth);

  m.def("delta",
        [](const std::string& alpha, int digits) { return real_tuple(delta(parse_rational(alpha)), digits); },
        py::arg("alpha"), py::arg("digits") = 30);

  m.def("xi",
        [](const std::string& alpha, const std::string& beta, int digits) {
          return real_tuple(xi(parse_rational(alpha), BetaNumber::parse(beta)), digits);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("digits") = 30);

  m.def("christoffel",
        [](long p, long q) {
          const Christoffel c = christoffel(p, q);
          return py::make_tuple(c.lower.to_string(), c.upper.to_string(), c.central.to_string());
        },
        py::arg("p"), py::arg("q"));

  m.def("pal", [](const std::string& w) { return pal(FiniteWord::parse(w)).to_string(); });
  m.def("palindromic_closure",
        [](const std::string& w) { return palindromic_closure(FiniteWord::parse(w)).to_string(); });
  m.def("is_central", [](const std::string& w) { return is_central(FiniteWord::parse(w)); });

  m.def("classify", [](const std::string& w) { return describe(classify_balanced(EpWord::parse(w))); });
}
