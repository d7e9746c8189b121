#include "hitproblem/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hitproblem/certificates.hpp"
#include "hitproblem/claims.hpp"
#include "hitproblem/invariants.hpp"

namespace hitp {

namespace {

struct DegreeOpts {
  u64 n = 0;
  u64 polydeg = 0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* d_opt = nullptr;

  u64 resolve() const {
    if ((n_opt->count() > 0) == (d_opt->count() > 0))
      throw CLI::ValidationError("degree", "give exactly one of -n/--degree or --polydeg");
    return n_opt->count() > 0 ? n : 2 * polydeg;
  }
};

void add_degree_opts(CLI::App* cmd, DegreeOpts& deg) {
  deg.n_opt = cmd->add_option("-n,--degree", deg.n, "topological degree (even)");
  deg.d_opt = cmd->add_option("--polydeg", deg.polydeg, "polynomial degree (converted to n = 2d)");
  deg.n_opt->excludes(deg.d_opt);
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::VerifiedInRange: return kExitOk;
    case Verdict::RefutedWithCertificate: return kExitRefuted;
    case Verdict::Undetermined: return kExitUndetermined;
  }
  return kExitUndetermined;
}

void write_report(const ClaimReport& rep, const std::string& path, std::ostream& out) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write report file " + path);
  f << rep.to_json().dump(2) << '\n';
  out << "claim " << rep.claim << ": " << to_string(rep.verdict) << " ("
      << rep.certificates.size() << " certificate(s)), report written to " << path << "\n";
}

std::vector<u64> parse_u64_list(const std::string& s) {
  std::vector<u64> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steenrod reduced-power engine for the mod-p hit problem on F_p[t1..th]"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  u32 p = 3, h = 2;
  int exit_code = kExitOk;

  // ---- apply ----
  auto* apply = app.add_subcommand("apply", "evaluate P^k on a polynomial");
  u32 apply_k = 0;
  std::string apply_poly;
  apply->add_option("-p,--prime", p, "odd prime modulus")->required();
  apply->add_option("-h,--vars", h, "number of variables")->required();
  apply->add_option("-k", apply_k, "power operation index")->required();
  apply->add_option("poly", apply_poly, "polynomial, e.g. \"t1^4*t2^5 + t1^8*t2\"")->required();
  apply->callback([&]() {
    Polynomial f = parse_polynomial(p, h, apply_poly);
    out << to_string(reduced_power(f, apply_k)) << "\n";
  });

  // ---- quotient ----
  auto* quot = app.add_subcommand("quotient", "hit quotient dimension and monomial basis");
  DegreeOpts quot_deg;
  std::string quot_format = "text";
  quot->add_option("-p,--prime", p, "odd prime modulus")->required();
  quot->add_option("-h,--vars", h, "number of variables")->required();
  add_degree_opts(quot, quot_deg);
  quot->add_option("--format", quot_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  quot->final_callback([&]() {
    u64 n = quot_deg.resolve();
    QuotientPtr q = quotient(p, h, n);
    if (quot_format == "json") {
      json j;
      j["schema_version"] = 1;
      j["p"] = p;
      j["h"] = h;
      j["n"] = n;
      j["ambient"] = q->ambient.size();
      j["rank"] = q->rank();
      j["dim"] = q->dim();
      json basis = json::array();
      for (const auto& m : q->quotient_monomials) basis.push_back(to_string(m));
      j["basis"] = std::move(basis);
      out << j.dump(2) << "\n";
    } else {
      out << "p=" << p << " h=" << h << " n=" << n << "\n";
      out << "ambient " << q->ambient.size() << ", hit rank " << q->rank() << ", dim "
          << q->dim() << "\n";
      out << "basis:";
      for (const auto& m : q->quotient_monomials) out << ' ' << to_string(m);
      out << "\n";
    }
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "verify or refute a claim, writing a report file");
  verify->require_subcommand(1);
  std::string report_path;

  auto* crossley = verify->add_subcommand("crossley", "basis tables sweep");
  u64 crossley_nmax = 0;
  crossley->add_option("-p,--prime", p, "odd prime modulus")->required();
  crossley->add_option("-h,--vars", h, "number of variables (1 or 2)")->required();
  crossley->add_option("--nmax", crossley_nmax, "top even degree of the sweep")->required();
  crossley->add_option("--out", report_path, "report file path");
  crossley->callback([&]() {
    ClaimReport rep = verify_crossley(p, h, crossley_nmax);
    write_report(rep, report_path.empty() ? "claim_crossley.json" : report_path, out);
    exit_code = verdict_exit(rep.verdict);
  });

  auto* thm24 = verify->add_subcommand("thm24", "kernel-vs-image counterexample search");
  u64 thm24_nmin = 2, thm24_nmax = 0;
  thm24->add_option("-p,--prime", p, "odd prime modulus")->required();
  thm24->add_option("-h,--vars", h, "number of variables")->required();
  thm24->add_option("--nmax", thm24_nmax, "top even degree of the search")->required();
  thm24->add_option("--nmin", thm24_nmin, "bottom even degree of the search");
  thm24->add_option("--out", report_path, "report file path");
  thm24->callback([&]() {
    ClaimReport rep = thm24_search(p, h, thm24_nmin, thm24_nmax);
    write_report(rep, report_path.empty() ? "claim_thm24.json" : report_path, out);
    exit_code = verdict_exit(rep.verdict);
  });

  auto* phi = verify->add_subcommand("phi", "phi-map hit sweep");
  PhiParams phi_params;
  std::string phi_q = "1";
  u32 phi_samples = 100, phi_maxdeg = 3;
  u64 phi_seed = 0;
  phi->add_option("-p,--prime", p, "odd prime modulus")->required();
  phi->add_option("-h,--vars", h, "number of variables")->required();
  phi->add_option("--t", phi_params.t, "parameter t >= 1")->required();
  phi->add_option("--q", phi_q, "comma-separated positive exponents q1..qh")->required();
  phi->add_option("--samples", phi_samples, "random sample count");
  phi->add_option("--seed", phi_seed, "RNG seed");
  phi->add_option("--maxdeg", phi_maxdeg, "max polynomial degree of samples");
  phi->add_option("--out", report_path, "report file path");
  phi->callback([&]() {
    phi_params.q = parse_u64_list(phi_q);
    ClaimReport rep = phi_always_hit(p, h, phi_params, phi_samples, phi_seed, phi_maxdeg);
    write_report(rep, report_path.empty() ? "claim_phi.json" : report_path, out);
    exit_code = verdict_exit(rep.verdict);
  });

  auto* psi = verify->add_subcommand("psi", "psi-map empirical hit probe");
  PsiParams psi_params;
  std::string psi_q = "1", psi_r;
  u32 psi_samples = 20, psi_maxdeg = 2;
  u64 psi_seed = 0;
  std::size_t psi_budget = 5000;
  psi->add_option("-p,--prime", p, "odd prime modulus")->required();
  psi->add_option("-h,--vars", h, "number of variables")->required();
  psi->add_option("--t", psi_params.t, "parameter t >= 2")->required();
  psi->add_option("--q", psi_q, "comma-separated exponents q1..qh")->required();
  psi->add_option("--r", psi_r, "comma-separated residues r1..ri for the first i variables");
  psi->add_option("--i", psi_params.split, "split index i");
  psi->add_flag("--allow-q-zero", psi_params.allow_zero_q, "permit q_j = 0 (Crossley Lemma 2.1 case)");
  psi->add_option("--samples", psi_samples, "random sample count");
  psi->add_option("--seed", psi_seed, "RNG seed");
  psi->add_option("--maxdeg", psi_maxdeg, "max polynomial degree of sampled sources");
  psi->add_option("--budget", psi_budget, "ambient-dimension budget");
  psi->add_option("--out", report_path, "report file path");
  psi->callback([&]() {
    psi_params.q = parse_u64_list(psi_q);
    psi_params.r.clear();
    if (!psi_r.empty())
      for (u64 v : parse_u64_list(psi_r)) psi_params.r.push_back(static_cast<u32>(v));
    ClaimReport rep =
        psi_preserves_hit_probe(p, h, psi_params, psi_samples, psi_seed, psi_maxdeg, psi_budget);
    write_report(rep, report_path.empty() ? "claim_psi.json" : report_path, out);
    exit_code = verdict_exit(rep.verdict);
  });

  // ---- recheck ----
  auto* recheck = app.add_subcommand("recheck", "independently re-verify a certificate or report file");
  std::string recheck_path;
  recheck->add_option("file", recheck_path, "certificate or claim-report JSON file")->required();
  recheck->callback([&]() {
    std::ifstream in(recheck_path);
    if (!in) throw std::runtime_error("cannot open " + recheck_path);
    json j = json::parse(in);
    std::vector<json> certs;
    if (j.contains("type"))
      certs.push_back(j);
    else if (j.contains("certificates"))
      for (const auto& c : j["certificates"]) certs.push_back(c);
    else
      throw std::runtime_error("file is neither a certificate nor a claim report");
    bool all = true;
    for (std::size_t i = 0; i < certs.size(); ++i) {
      RecheckResult r = recheck_certificate(certs[i]);
      out << "certificate " << i << ": " << (r.pass ? "pass" : "FAIL") << " — " << r.message
          << "\n";
      all = all && r.pass;
    }
    if (certs.empty()) out << "no certificates present; nothing to recheck\n";
    exit_code = all ? kExitOk : kExitError;
  });

  // ---- invariants ----
  auto* inv = app.add_subcommand("invariants", "GL(h,F_p) fixed points on the hit quotient");
  DegreeOpts inv_deg;
  std::string inv_method = "generators", inv_format = "text";
  std::size_t inv_budget = 200000;
  inv->add_option("-p,--prime", p, "odd prime modulus")->required();
  inv->add_option("-h,--vars", h, "number of variables")->required();
  add_degree_opts(inv, inv_deg);
  inv->add_option("--method", inv_method, "generators or full-group")
      ->check(CLI::IsMember({"generators", "full-group"}));
  inv->add_option("--budget", inv_budget, "full-group enumeration budget");
  inv->add_option("--format", inv_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  inv->final_callback([&]() {
    u64 n = inv_deg.resolve();
    InvariantReport rep = invariant_subspace(
        p, h, n,
        inv_method == "full-group" ? InvariantMethod::FullGroup : InvariantMethod::Generators,
        inv_budget);
    if (inv_format == "json") {
      out << rep.to_json().dump(2) << "\n";
    } else {
      out << "p=" << p << " h=" << h << " n=" << n << " method=" << inv_method << "\n";
      out << "quotient dim " << rep.quotient_dim << ", invariant dim " << rep.dim() << "\n";
      for (const auto& v : rep.basis) {
        out << "fixed:";
        for (u32 c : v) out << ' ' << c;
        out << "\n";
      }
    }
  });

  try {
    // CLI11's vector overload expects the arguments reversed.
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitError;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitUndetermined;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return exit_code;
}

}  // namespace hitp
