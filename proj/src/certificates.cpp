#include "hitproblem/certificates.hpp"

#include "hitproblem/hit.hpp"

namespace hitp {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_to_json(const Polynomial& f) {
  // Canonical form: [[exponents, coeff], ...] in descending grevlex order.
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back(ordered_json::array({m.e, c}));
  return terms;
}

Polynomial poly_from_json(u32 p, u32 h, const ordered_json& j) {
  Polynomial f(p, h);
  for (const auto& term : j) {
    auto e = term.at(0).get<std::vector<u32>>();
    u32 c = term.at(1).get<u32>();
    f.add_term(Monomial(std::move(e)), c);
  }
  return f;
}

ordered_json make_hit_witness_certificate(const HitDecomposition& w) {
  ordered_json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["type"] = "hit_witness";
  j["p"] = w.p;
  j["h"] = w.h;
  j["target"] = poly_to_json(w.target);
  ordered_json parts = ordered_json::array();
  for (const auto& [k, fk] : w.parts) parts.push_back(ordered_json::array({k, poly_to_json(fk)}));
  j["parts"] = std::move(parts);
  return j;
}

ordered_json make_thm24_certificate(u32 p, u32 h, u64 n, const Polynomial& f) {
  ordered_json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["type"] = "thm24_counterexample";
  j["p"] = p;
  j["h"] = h;
  j["n"] = n;
  j["f"] = poly_to_json(f);
  return j;
}

ordered_json make_not_hit_certificate(u32 p, u32 h, u64 n, const Polynomial& f,
                                      const ordered_json& context) {
  ordered_json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["type"] = "not_hit";
  j["p"] = p;
  j["h"] = h;
  j["n"] = n;
  j["f"] = poly_to_json(f);
  j["context"] = context;
  return j;
}

namespace {

// Matrix of the hit generating set in degree n: columns are P^k(m), rows are
// ambient monomial coordinates. Built from the P^k evaluator only.
FpMatrix hit_generator_matrix(u32 p, u32 h, u64 n, const std::vector<Monomial>& ambient) {
  std::map<Monomial, std::size_t, GrevlexGreater> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], i);
  std::vector<Polynomial> images;
  for_each_hit_generator(p, h, n, [&](u32, const Monomial&, const Polynomial& img) {
    images.push_back(img);
  });
  FpMatrix a(p, ambient.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [m, c] : images[j].terms()) a.at(index.at(m), j) = c;
  return a;
}

RecheckResult fail(std::string msg) { return {false, std::move(msg)}; }

RecheckResult recheck_hit_witness(const ordered_json& cert) {
  u32 p = cert.at("p").get<u32>();
  u32 h = cert.at("h").get<u32>();
  Polynomial target = poly_from_json(p, h, cert.at("target"));
  Polynomial sum(p, h);
  for (const auto& part : cert.at("parts")) {
    u32 k = part.at(0).get<u32>();
    if (k == 0) return fail("witness uses P^0");
    sum = sum + reduced_power(poly_from_json(p, h, part.at(1)), k);
  }
  if (sum == target) return {true, "witness reproduces the target"};
  return fail("witness evaluates to " + to_string(sum) + ", expected " + to_string(target));
}

RecheckResult recheck_thm24(const ordered_json& cert) {
  u32 p = cert.at("p").get<u32>();
  u32 h = cert.at("h").get<u32>();
  u64 n = cert.at("n").get<u64>();
  Polynomial f = poly_from_json(p, h, cert.at("f"));
  if (f.is_zero()) return fail("counterexample is zero");
  if (!f.is_homogeneous() || f.topdeg() != n) return fail("counterexample degree mismatch");
  if (!reduced_power(f, 1).is_zero()) return fail("P^1(f) is nonzero");
  // f must not be P^1 of anything from degree n - 2(p-1).
  if (n >= 2 * static_cast<u64>(p - 1)) {
    u64 src = n - 2 * (p - 1);
    auto ambient = enumerate_monomials(h, n);
    auto sources = enumerate_monomials(h, src);
    std::map<Monomial, std::size_t, GrevlexGreater> index;
    for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], i);
    FpMatrix a(p, ambient.size(), sources.size());
    for (std::size_t j = 0; j < sources.size(); ++j) {
      Polynomial image = reduced_power(sources[j], 1, p, h);
      for (const auto& [m, c] : image.terms()) a.at(index.at(m), j) = c;
    }
    if (solve(a, coordinates(f, ambient))) return fail("f = P^1(g) is solvable");
  }
  return {true, "P^1(f) = 0 and f is outside the image of P^1"};
}

RecheckResult recheck_not_hit(const ordered_json& cert) {
  u32 p = cert.at("p").get<u32>();
  u32 h = cert.at("h").get<u32>();
  u64 n = cert.at("n").get<u64>();
  Polynomial f = poly_from_json(p, h, cert.at("f"));
  if (f.is_zero()) return fail("zero polynomial is hit");
  if (!f.is_homogeneous() || f.topdeg() != n) return fail("polynomial degree mismatch");
  auto ambient = enumerate_monomials(h, n);
  FpMatrix a = hit_generator_matrix(p, h, n, ambient);
  if (solve(a, coordinates(f, ambient))) return fail("f is a combination of hit generators");
  return {true, "no hit decomposition exists"};
}

}  // namespace

RecheckResult recheck_certificate(const ordered_json& cert) {
  if (!cert.is_object()) return fail("certificate is not an object");
  if (cert.value("schema_version", 0) != kCertificateSchemaVersion)
    return fail("unsupported schema_version");
  std::string type = cert.value("type", "");
  try {
    if (type == "hit_witness") return recheck_hit_witness(cert);
    if (type == "thm24_counterexample") return recheck_thm24(cert);
    if (type == "not_hit") return recheck_not_hit(cert);
  } catch (const std::exception& e) {
    return fail(std::string("malformed certificate: ") + e.what());
  }
  return fail("unknown certificate type '" + type + "'");
}

}  // namespace hitp
