#include "hitproblem/claims.hpp"

#include <algorithm>
#include <random>

#include "hitproblem/certificates.hpp"

namespace hitp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::VerifiedInRange: return "verified-in-range";
    case Verdict::RefutedWithCertificate: return "refuted-with-certificate";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

json ClaimReport::to_json() const {
  json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["claim"] = claim;
  j["config"] = config;
  j["verdict"] = to_string(verdict);
  j["details"] = details;
  j["certificates"] = certificates;
  return j;
}

namespace {

Monomial xy(u64 a, u64 b) { return Monomial({static_cast<u32>(a), static_cast<u32>(b)}); }

void push_unique(std::vector<Monomial>& v, Monomial m) {
  if (std::find(v.begin(), v.end(), m) == v.end()) v.push_back(std::move(m));
}

// rng()-based draw; uniform_int_distribution is implementation-defined, and
// reports must be byte-identical across platforms.
u64 draw(std::mt19937_64& rng, u64 bound) { return rng() % bound; }

Polynomial random_homogeneous(std::mt19937_64& rng, u32 p, u32 h, u64 polydeg) {
  Polynomial f(p, h);
  for (const Monomial& m : enumerate_monomials(h, 2 * polydeg))
    f.add_term(m, static_cast<u32>(draw(rng, p)));
  return f;
}

}  // namespace

std::vector<TableEntry> table1_entries(u32 p, u64 n) {
  require_odd_prime(p);
  if (n % 2) throw std::invalid_argument("degree must be even");
  std::vector<TableEntry> out;
  u64 d = n / 2;
  u64 m = d + 2;  // every parametrized row solves (formula) * p^s = d + 2

  if (n <= 2 * static_cast<u64>(p - 2)) {
    TableEntry e{1, 1, n, json{{"i_max", d}}, {}};
    for (u64 i = 0; i <= d; ++i) e.monomials.push_back(xy(i, d - i));
    out.push_back(std::move(e));
  }

  u64 ps = 1;
  for (u64 s = 0; ps <= m; ++s, ps *= p) {
    if (m % ps != 0) continue;
    u64 k0 = m / ps;  // ((i+1)p + j + 1) etc.

    // Row 2: k0 = (i+1)p + j + 1, 0 <= i, j <= p-1.
    {
      u64 i1 = (k0 - 1) / p, j = (k0 - 1) % p;
      if (i1 >= 1 && i1 <= p) {
        u64 i = i1 - 1;
        TableEntry e{1, 2, n, json{{"i", i}, {"j", j}, {"s", s}}, {}};
        for (u64 k = std::min(i + 1, j); k <= p - 1; ++k) {
          u64 xe = (k + 1) * ps - 1;
          if (xe > d) continue;
          push_unique(e.monomials, xy(xe, d - xe));
        }
        for (u64 k = 0; k <= i; ++k) {
          u64 xe = (k + 1) * ps * p - 1;
          if (xe > d) continue;
          push_unique(e.monomials, xy(xe, d - xe));
        }
        out.push_back(std::move(e));
      }
    }

    // Row 3: k0 = (i+1)p^r + j + 1, 1 <= i <= p-1, 0 <= j <= p-2, r >= 2.
    for (u64 pr = static_cast<u64>(p) * p, r = 2; pr <= k0; ++r, pr *= p) {
      u64 j1 = k0 % pr;          // j + 1
      u64 i1 = k0 / pr;          // i + 1
      if (j1 < 1 || j1 > p - 1 || i1 < 2 || i1 > p) continue;
      TableEntry e{1, 3, n, json{{"i", i1 - 1}, {"j", j1 - 1}, {"r", r}, {"s", s}}, {}};
      for (u64 k = 1; k <= p - 1; ++k) {
        u64 xe = (k + 1) * ps * p - 1;
        if (xe > d) continue;
        push_unique(e.monomials, xy(xe, d - xe));
      }
      push_unique(e.monomials, xy(j1 * ps - 1, i1 * pr * ps - 1));
      push_unique(e.monomials, xy(i1 * pr * ps - 1, j1 * ps - 1));
      out.push_back(std::move(e));
    }

    // Row 4: k0 = p^2 + ip + j + 1, 1 <= i <= j <= p-2.
    if (k0 >= static_cast<u64>(p) * p + 1) {
      u64 l = k0 - static_cast<u64>(p) * p - 1;
      u64 i = l / p, j = l % p;
      if (i >= 1 && i <= j && j <= p - 2) {
        TableEntry e{1, 4, n, json{{"i", i}, {"j", j}, {"s", s}}, {}};
        for (u64 k = i; k <= j; ++k) {
          u64 xe = (k + 1) * ps * p - 1;
          if (xe > d) continue;
          push_unique(e.monomials, xy(xe, d - xe));
        }
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

std::vector<TableEntry> table2_entries(u32 p, u64 n) {
  require_odd_prime(p);
  if (n % 2) throw std::invalid_argument("degree must be even");
  std::vector<TableEntry> out;
  u64 d = n / 2;
  Monomial xd({static_cast<u32>(d)});

  if (n <= 2 * static_cast<u64>(p - 2))
    out.push_back(TableEntry{2, 1, n, json::object(), {xd}});

  // Row 2: d + 1 = (i+1)p, 0 <= i <= p-1.
  if ((d + 1) % p == 0) {
    u64 i1 = (d + 1) / p;
    if (i1 >= 1 && i1 <= p)
      out.push_back(TableEntry{2, 2, n, json{{"i", i1 - 1}}, {xd}});
  }

  // Row 3: d + 1 = (i+1)p^r, 1 <= i <= p-1, r >= 2.
  for (u64 pr = static_cast<u64>(p) * p, r = 2; pr <= d + 1; ++r, pr *= p) {
    if ((d + 1) % pr != 0) continue;
    u64 i1 = (d + 1) / pr;
    if (i1 >= 2 && i1 <= p)
      out.push_back(TableEntry{2, 3, n, json{{"i", i1 - 1}, {"r", r}}, {xd}});
  }
  return out;
}

std::vector<Monomial> table_basis(u32 p, u32 h, u64 n) {
  if (h != 1 && h != 2) throw std::invalid_argument("tables cover h = 1 and h = 2 only");
  std::vector<Monomial> set;
  for (const TableEntry& e : (h == 2 ? table1_entries(p, n) : table2_entries(p, n)))
    for (const Monomial& m : e.monomials) push_unique(set, m);
  return set;
}

ClaimReport verify_crossley(u32 p, u32 h, u64 n_max) {
  if (h != 1 && h != 2) throw std::invalid_argument("verify_crossley: h must be 1 or 2");
  require_odd_prime(p);
  ClaimReport rep;
  rep.claim = "crossley";
  rep.config = json{{"p", p}, {"h", h}, {"n_max", n_max}};
  json degrees = json::array();
  bool all_ok = true;
  for (u64 n = 0; n <= n_max; n += 2) {
    std::vector<Monomial> set = table_basis(p, h, n);
    QuotientPtr q = quotient(p, h, n);
    json rec{{"n", n}, {"dim", q->dim()}, {"table_size", set.size()}};
    bool ok;
    if (set.empty()) {
      ok = q->dim() == 0;
      if (!ok) {
        // Uncovered degree with a nonzero quotient: any quotient basis
        // monomial is a re-checkable non-hit witness.
        Polynomial f = Polynomial::from_monomial(p, h, q->quotient_monomials.front());
        rep.certificates.push_back(make_not_hit_certificate(
            p, h, n, f, json{{"reason", "uncovered degree has nonzero quotient"}}));
      }
    } else {
      ok = set.size() == q->dim();
      if (ok) {
        // Residues of the table monomials must be linearly independent.
        RowReducer red(p, q->dim());
        for (const Monomial& m : set) {
          if (m.topdeg() != n) {
            ok = false;
            break;
          }
          std::vector<u32> res = reduce(Polynomial::from_monomial(p, h, m), *q);
          if (!red.add_row(res)) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        // A failing table set of the right size has a hit dependency; find
        // it by solving on the residues and certify the combination.
        rec["failure"] = "table set is not a quotient basis";
        RowReducer red(p, q->dim());
        Polynomial dep(p, h);
        std::vector<Monomial> used;
        for (const Monomial& m : set) {
          if (m.topdeg() != n) continue;
          used.push_back(m);
          if (!red.add_row(reduce(Polynomial::from_monomial(p, h, m), *q))) {
            // residues of `used` are dependent: solve for the combination
            FpMatrix a(p, q->dim(), used.size() - 1);
            for (std::size_t j = 0; j + 1 < used.size(); ++j) {
              auto col = reduce(Polynomial::from_monomial(p, h, used[j]), *q);
              for (std::size_t i = 0; i < col.size(); ++i) a.at(i, j) = col[i];
            }
            auto x = solve(a, reduce(Polynomial::from_monomial(p, h, m), *q));
            if (x) {
              dep = Polynomial::from_monomial(p, h, m);
              for (std::size_t j = 0; j + 1 < used.size(); ++j)
                dep.add_term(used[j], neg_mod((*x)[j], p));
              HitReport hr = is_hit(dep, *q);
              if (hr.hit && hr.witness)
                rep.certificates.push_back(make_hit_witness_certificate(*hr.witness));
            }
            break;
          }
        }
      }
    }
    rec["ok"] = ok;
    all_ok = all_ok && ok;
    degrees.push_back(std::move(rec));
  }
  rep.details["degrees"] = std::move(degrees);
  rep.verdict = all_ok ? Verdict::VerifiedInRange : Verdict::RefutedWithCertificate;
  return rep;
}

ClaimReport thm24_search(u32 p, u32 h, u64 n_min, u64 n_max) {
  require_odd_prime(p);
  if (n_min % 2 || n_max % 2) throw std::invalid_argument("degree range must be even");
  ClaimReport rep;
  rep.claim = "thm24";
  rep.config = json{{"p", p}, {"h", h}, {"n_min", n_min}, {"n_max", n_max},
                    {"reading", "universal: hypothesis P^1(f)=0 searched over all even degrees in range"}};
  json degrees = json::array();
  bool refuted = false;
  u64 shift = 2 * static_cast<u64>(p - 1);
  for (u64 n = n_min; n <= n_max; n += 2) {
    auto domain = enumerate_monomials(h, n);
    auto target = enumerate_monomials(h, n + shift);
    std::map<Monomial, std::size_t, GrevlexGreater> tindex;
    for (std::size_t i = 0; i < target.size(); ++i) tindex.emplace(target[i], i);
    // Matrix of P^1 : (degree n) -> (degree n + 2(p-1)), columns = domain.
    FpMatrix m1(p, target.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
      Polynomial image = reduced_power(domain[j], 1, p, h);
      for (const auto& [m, c] : image.terms()) m1.at(tindex.at(m), j) = c;
    }
    auto kernel = kernel_basis(m1);

    // Image of P^1 landing in degree n.
    RowReducer image(p, domain.size());
    if (n >= shift) {
      std::map<Monomial, std::size_t, GrevlexGreater> dindex;
      for (std::size_t i = 0; i < domain.size(); ++i) dindex.emplace(domain[i], i);
      for (const Monomial& src : enumerate_monomials(h, n - shift)) {
        Polynomial img = reduced_power(src, 1, p, h);
        if (img.is_zero()) continue;
        std::vector<u32> row(domain.size(), 0);
        for (const auto& [m, c] : img.terms()) row[dindex.at(m)] = c;
        image.add_row(std::move(row));
      }
    }

    json rec{{"n", n}, {"kernel_dim", kernel.size()}, {"image_dim", image.rank()}};
    bool contained = true;
    for (const auto& v : kernel) {
      if (image.contains(v)) continue;
      contained = false;
      Polynomial f = from_coordinates(p, v, domain, h);
      json cert = make_thm24_certificate(p, h, n, f);
      RecheckResult rc = recheck_certificate(cert);
      if (!rc.pass) throw std::logic_error("thm24 certificate failed recheck: " + rc.message);
      rep.certificates.push_back(std::move(cert));
      break;
    }
    rec["kernel_in_image"] = contained;
    refuted = refuted || !contained;
    degrees.push_back(std::move(rec));
  }
  rep.details["degrees"] = std::move(degrees);
  rep.verdict = refuted ? Verdict::RefutedWithCertificate : Verdict::VerifiedInRange;
  return rep;
}

void validate(const PhiParams& params, u32 p, u32 h) {
  require_odd_prime(p);
  if (params.t < 1) throw std::invalid_argument("phi: t must be >= 1");
  if (params.q.size() != h) throw std::invalid_argument("phi: need h exponents q");
  for (u64 qi : params.q)
    if (qi < 1) throw std::invalid_argument("phi: q_i must be positive");
}

void validate(const PsiParams& params, u32 p, u32 h) {
  require_odd_prime(p);
  if (params.t < 2) throw std::invalid_argument("psi: t must be >= 2");
  if (params.q.size() != h) throw std::invalid_argument("psi: need h exponents q");
  if (params.split > h) throw std::invalid_argument("psi: split index exceeds h");
  if (params.r.size() != params.split)
    throw std::invalid_argument("psi: need one residue r_j per split variable");
  for (u64 qi : params.q)
    if (qi < 1 && !params.allow_zero_q) throw std::invalid_argument("psi: q_i must be positive");
  for (u32 rj : params.r)
    if (rj < 1 || rj > p - 1) throw std::invalid_argument("psi: r_j must lie in [1, p-1]");
}

namespace {

Monomial scale_prefix(u32 h, const std::vector<u64>& q, u64 power, const std::vector<u32>* r,
                      u32 split) {
  std::vector<u32> e(h, 0);
  for (u32 i = 0; i < h; ++i) {
    u64 exp = q[i] * power;
    if (r && i < split) exp += (*r)[i];
    e[i] = static_cast<u32>(exp);
  }
  return Monomial(std::move(e));
}

}  // namespace

Polynomial phi_map(const Polynomial& f, const PhiParams& params) {
  validate(params, f.p(), f.vars());
  u64 pt1 = 1;
  for (u32 i = 0; i <= params.t; ++i) pt1 *= f.p();
  Monomial prefix = scale_prefix(f.vars(), params.q, pt1, nullptr, 0);
  return Polynomial::from_monomial(f.p(), f.vars(), prefix) * f.pow(f.p());
}

Polynomial psi_map(const Polynomial& g, const PsiParams& params) {
  validate(params, g.p(), g.vars());
  u64 pt1 = 1;
  for (u32 i = 0; i <= params.t; ++i) pt1 *= g.p();
  Monomial prefix = scale_prefix(g.vars(), params.q, pt1, &params.r, params.split);
  return Polynomial::from_monomial(g.p(), g.vars(), prefix) * g.pow(g.p());
}

ClaimReport phi_always_hit(u32 p, u32 h, const PhiParams& params, u32 samples, u64 seed,
                           u32 max_polydeg) {
  validate(params, p, h);
  ClaimReport rep;
  rep.claim = "phi";
  rep.config = json{{"p", p}, {"h", h},       {"t", params.t},          {"q", params.q},
                    {"samples", samples},      {"seed", seed},           {"max_polydeg", max_polydeg}};
  std::mt19937_64 rng(seed);
  u64 pt = 1;
  for (u32 i = 0; i < params.t; ++i) pt *= p;
  u32 trivial = 0, checked = 0;
  bool all_ok = true;
  for (u32 s = 0; s < samples && all_ok; ++s) {
    Polynomial f = random_homogeneous(rng, p, h, draw(rng, max_polydeg + 1));
    while (f.is_zero()) {
      ++trivial;
      f = random_homogeneous(rng, p, h, draw(rng, max_polydeg + 1));
    }
    Polynomial phif = phi_map(f, params);
    // phi(f) = u^p with u = t1^{q1 p^t} ... th^{qh p^t} f.
    Polynomial u = Polynomial::from_monomial(p, h, scale_prefix(h, params.q, pt, nullptr, 0)) * f;
    HitDecomposition w = pth_power_witness(u);
    if (w.target != phif) {
      all_ok = false;
      rep.details["failure"] = json{{"sample", s}, {"reason", "phi(f) != u^p"}};
      break;
    }
    HitReport hr = is_hit(phif, *quotient(p, h, phif.topdeg()));
    if (!hr.hit) {
      all_ok = false;
      rep.certificates.push_back(make_not_hit_certificate(
          p, h, phif.topdeg(), phif, json{{"sample", s}, {"reason", "phi image not hit"}}));
      break;
    }
    ++checked;
  }
  rep.details["checked"] = checked;
  rep.details["zero_redraws"] = trivial;
  rep.verdict = all_ok ? Verdict::VerifiedInRange : Verdict::RefutedWithCertificate;
  return rep;
}

ClaimReport psi_preserves_hit_probe(u32 p, u32 h, const PsiParams& params, u32 samples,
                                    u64 seed, u32 max_polydeg, std::size_t budget) {
  validate(params, p, h);
  if (max_polydeg < 1) throw std::invalid_argument("psi probe: max_polydeg must be >= 1");
  ClaimReport rep;
  rep.claim = "psi";
  rep.config = json{{"p", p},           {"h", h},
                    {"t", params.t},    {"q", params.q},
                    {"r", params.r},    {"split", params.split},
                    {"allow_zero_q", params.allow_zero_q},
                    {"samples", samples}, {"seed", seed},
                    {"max_polydeg", max_polydeg}, {"budget", budget}};
  std::mt19937_64 rng(seed);
  json sample_log = json::array();
  bool refuted = false;
  u32 trivial = 0;
  for (u32 s = 0; s < samples && !refuted; ++s) {
    u64 dw = 1 + draw(rng, max_polydeg);
    u64 k = 1 + draw(rng, dw);
    Polynomial w = random_homogeneous(rng, p, h, dw);
    Polynomial g = reduced_power(w, static_cast<u32>(k));
    if (g.is_zero()) {
      ++trivial;
      continue;
    }
    Polynomial psig = psi_map(g, params);
    u64 m = psig.topdeg();
    if (monomial_count(h, m) > budget)
      throw BudgetError("psi probe: ambient dimension " + std::to_string(monomial_count(h, m)) +
                        " at degree " + std::to_string(m) + " exceeds budget " +
                        std::to_string(budget));
    HitReport hr = is_hit(psig, *quotient(p, h, m));
    sample_log.push_back(json{{"sample", s}, {"source_polydeg", dw}, {"k", k},
                              {"g_degree", g.topdeg()}, {"psi_degree", m}, {"hit", hr.hit}});
    if (!hr.hit) {
      refuted = true;
      json context{{"g_construction", json{{"k", k}, {"w", poly_to_json(w)}}},
                   {"params", rep.config}};
      json cert = make_not_hit_certificate(p, h, m, psig, context);
      RecheckResult rc = recheck_certificate(cert);
      if (!rc.pass) throw std::logic_error("psi certificate failed recheck: " + rc.message);
      rep.certificates.push_back(std::move(cert));
    }
  }
  rep.details["samples"] = std::move(sample_log);
  rep.details["trivial_zero_samples"] = trivial;
  rep.details["note"] = "empirical probe only; no claim about the theorem is made";
  rep.verdict = refuted ? Verdict::RefutedWithCertificate : Verdict::VerifiedInRange;
  return rep;
}

}  // namespace hitp
