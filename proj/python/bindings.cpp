#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hitproblem/certificates.hpp"
#include "hitproblem/claims.hpp"
#include "hitproblem/invariants.hpp"

namespace py = pybind11;
using namespace hitp;

namespace {

std::string basis_str(const std::vector<Monomial>& ms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ms.size(); ++i) os << (i ? " " : "") << to_string(ms[i]);
  return os.str();
}

py::dict quotient_info(u32 p, u32 h, u64 n) {
  QuotientPtr q = quotient(p, h, n);
  py::dict d;
  d["p"] = p;
  d["h"] = h;
  d["n"] = n;
  d["ambient"] = q->ambient.size();
  d["rank"] = q->rank();
  d["dim"] = q->dim();
  py::list basis;
  for (const auto& m : q->quotient_monomials) basis.append(to_string(m));
  d["basis"] = basis;
  return d;
}

py::dict hit_info(u32 p, u32 h, const std::string& text) {
  Polynomial f = parse_polynomial(p, h, text);
  HitReport r = is_hit(f, *quotient(p, h, f.topdeg()));
  py::dict d;
  d["hit"] = r.hit;
  if (r.hit) {
    py::dict witness;
    for (const auto& [k, fk] : r.witness->parts) witness[py::int_(k)] = to_string(fk);
    d["witness"] = witness;
    d["certificate"] = make_hit_witness_certificate(*r.witness).dump();
  } else {
    d["residue"] = r.residue;
  }
  return d;
}

py::dict claim_dict(const ClaimReport& rep) {
  py::dict d;
  d["claim"] = rep.claim;
  d["verdict"] = to_string(rep.verdict);
  d["certificates"] = rep.certificates.size();
  d["report"] = rep.to_json().dump();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Steenrod reduced-power engine for the mod-p hit problem on F_p[t1..th]";

  m.def("lucas_binom", &lucas_binom, py::arg("n"), py::arg("k"), py::arg("p"),
        "C(n, k) mod p by Lucas' theorem");

  m.def(
      "apply_power",
      [](u32 p, u32 h, u32 k, const std::string& text) {
        return to_string(reduced_power(parse_polynomial(p, h, text), k));
      },
      py::arg("p"), py::arg("h"), py::arg("k"), py::arg("poly"),
      "Evaluate P^k on a polynomial given in text form");

  m.def(
      "cartan_check",
      [](u32 p, u32 h, const std::string& f, const std::string& g, u32 k) {
        return cartan_check(parse_polynomial(p, h, f), parse_polynomial(p, h, g), k);
      },
      py::arg("p"), py::arg("h"), py::arg("f"), py::arg("g"), py::arg("k"));

  m.def("quotient", &quotient_info, py::arg("p"), py::arg("h"), py::arg("n"),
        "Hit quotient dimension and monomial basis in topological degree n");

  m.def("is_hit", &hit_info, py::arg("p"), py::arg("h"), py::arg("poly"),
        "Hit membership with a re-verified witness or a nonzero residue");

  m.def(
      "table_basis",
      [](u32 p, u32 h, u64 n) {
        py::list out;
        for (const auto& mono : table_basis(p, h, n)) out.append(to_string(mono));
        return out;
      },
      py::arg("p"), py::arg("h"), py::arg("n"), "Crossley table monomials covering degree n");

  m.def(
      "verify_crossley",
      [](u32 p, u32 h, u64 n_max) { return claim_dict(verify_crossley(p, h, n_max)); },
      py::arg("p"), py::arg("h"), py::arg("n_max"));

  m.def(
      "thm24_search",
      [](u32 p, u32 h, u64 n_min, u64 n_max) {
        return claim_dict(thm24_search(p, h, n_min, n_max));
      },
      py::arg("p"), py::arg("h"), py::arg("n_min"), py::arg("n_max"));

  m.def(
      "invariant_dim",
      [](u32 p, u32 h, u64 n, const std::string& method, std::size_t budget) {
        auto rep = invariant_subspace(
            p, h, n,
            method == "full-group" ? InvariantMethod::FullGroup : InvariantMethod::Generators,
            budget);
        return rep.dim();
      },
      py::arg("p"), py::arg("h"), py::arg("n"), py::arg("method") = "generators",
      py::arg("budget") = 200000,
      "Dimension of the GL(h,F_p) fixed subspace of the degree-n hit quotient");

  m.def(
      "recheck_certificate",
      [](const std::string& cert_json) {
        auto r = recheck_certificate(nlohmann::ordered_json::parse(cert_json));
        return py::make_tuple(r.pass, r.message);
      },
      py::arg("cert_json"), "Re-verify a serialized certificate; returns (pass, message)");

  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<ParseError>(m, "PolyParseError");
}
