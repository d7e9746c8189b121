#pragma once

#include <nlohmann/json.hpp>

#include "hitproblem/hit.hpp"

namespace hitp {

using json = nlohmann::ordered_json;

enum class Verdict { VerifiedInRange, RefutedWithCertificate, Undetermined };

std::string to_string(Verdict v);

struct ClaimReport {
  std::string claim;
  json config = json::object();
  Verdict verdict = Verdict::Undetermined;
  json details = json::object();
  std::vector<json> certificates;

  json to_json() const;
};

// One parametrized row instance of Crossley's basis tables.
struct TableEntry {
  int table = 1;  // 1 for h=2, 2 for h=1
  int row = 1;
  u64 n = 0;
  json params = json::object();
  std::vector<Monomial> monomials;
};

// Table 1 (h=2) instances covering topological degree n. Row monomial sets
// may overlap; consumers take unions.
std::vector<TableEntry> table1_entries(u32 p, u64 n);

// Table 2 (h=1) instances covering topological degree n.
std::vector<TableEntry> table2_entries(u32 p, u64 n);

// Union of the table monomials at degree n (empty when no row matches).
std::vector<Monomial> table_basis(u32 p, u32 h, u64 n);

// Checks, for every even n <= n_max, that the table monomials map to a basis
// of the quotient, and that uncovered degrees have dimension 0.
ClaimReport verify_crossley(u32 p, u32 h, u64 n_max);

// Searches even degrees in [n_min, n_max] for f with P^1(f) = 0 that is not
// of the form P^1(g). Emits a re-checked counterexample certificate per
// failing degree.
ClaimReport thm24_search(u32 p, u32 h, u64 n_min, u64 n_max);

struct PhiParams {
  u32 t = 1;                // t >= 1
  std::vector<u64> q;      // h positive integers
};

struct PsiParams {
  u32 t = 2;                // t >= 2
  std::vector<u64> q;      // h integers, positive unless allow_zero_q
  std::vector<u32> r;      // residues in [1, p-1] for the first `split` vars
  u32 split = 0;            // i: number of leading variables carrying r_j
  bool allow_zero_q = false;
};

void validate(const PhiParams& params, u32 p, u32 h);
void validate(const PsiParams& params, u32 p, u32 h);

// phi(f) = t1^{q1 p^{t+1}} ... th^{qh p^{t+1}} f^p.
Polynomial phi_map(const Polynomial& f, const PhiParams& params);

// psi(g) = t1^{q1 p^{t+1}+r1} ... ti^{qi p^{t+1}+ri}
//          t_{i+1}^{q_{i+1} p^{t+1}} ... th^{qh p^{t+1}} g^p.
Polynomial psi_map(const Polynomial& g, const PsiParams& params);

// Samples random homogeneous f, checks phi(f) = u^p with
// u = t1^{q1 p^t}...th^{qh p^t} f, extracts the p-th-power hit witness for u
// and confirms the hit verdict through the quotient. Expected outcome is
// verified-in-range for every sample; a failure means an engine bug.
ClaimReport phi_always_hit(u32 p, u32 h, const PhiParams& params, u32 samples, u64 seed,
                           u32 max_polydeg);

// Samples hit polynomials g = P^k(w) and tests whether psi(g) is hit. Purely
// empirical; a non-hit psi(g) yields a refutation certificate. Degrees whose
// ambient dimension exceeds `budget` raise BudgetError.
ClaimReport psi_preserves_hit_probe(u32 p, u32 h, const PsiParams& params, u32 samples,
                                    u64 seed, u32 max_polydeg, std::size_t budget);

}  // namespace hitp
