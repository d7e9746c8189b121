#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "hitproblem/steenrod.hpp"

namespace hitp {

// Degree-n slice of F_p (x)_{A_p} P_h: the ambient monomials, the hit
// subspace in row-reduced form, and the monomials whose images form a basis
// of the quotient (non-pivot columns under the global grevlex order).
struct QuotientPresentation {
  u32 p = 3;
  u32 h = 1;
  u64 n = 0;
  std::vector<Monomial> ambient;
  FpMatrix hit_basis;                     // RREF rows in ambient coordinates
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> quotient_cols;  // ambient indices, increasing
  std::vector<Monomial> quotient_monomials;

  std::size_t dim() const { return quotient_monomials.size(); }
  std::size_t rank() const { return pivot_cols.size(); }
};

using QuotientPtr = std::shared_ptr<const QuotientPresentation>;

// Visits the spanning set of the hit subspace in degree n: P^k(m) for
// 1 <= k <= n/(2p) and every monomial m of topological degree n - 2k(p-1).
// Zero images are skipped.
void for_each_hit_generator(u32 p, u32 h, u64 n,
                            const std::function<void(u32 k, const Monomial& src,
                                                     const Polynomial& image)>& fn);

std::vector<Polynomial> hit_generators(u32 p, u32 h, u64 n);

QuotientPresentation compute_quotient(u32 p, u32 h, u64 n);

// Cached variant. The in-memory cache is shared and write-once per key; when
// the HITP_CACHE_DIR environment variable is set, presentations are also
// persisted there (atomic write-then-rename).
QuotientPtr quotient(u32 p, u32 h, u64 n);

// Residue coordinates of f on q.quotient_monomials. Zero iff f is hit.
std::vector<u32> reduce(const Polynomial& f, const QuotientPresentation& q);

struct HitReport {
  Polynomial query;
  bool hit = false;
  std::optional<HitDecomposition> witness;  // present iff hit
  std::vector<u32> residue;                 // nonzero iff not hit

  explicit HitReport(Polynomial q) : query(std::move(q)) {}
};

// Membership in the hit subspace. Hit verdicts always carry a witness that
// has been re-evaluated against f; a witness that fails to reproduce f is an
// engine bug and throws.
HitReport is_hit(const Polynomial& f, const QuotientPresentation& q);

}  // namespace hitp
