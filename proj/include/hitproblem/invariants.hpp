#pragma once

#include <nlohmann/json.hpp>

#include "hitproblem/hit.hpp"

namespace hitp {

using GroupElement = FpMatrix;  // invertible h x h over F_p

u32 det_mod(const FpMatrix& m);
bool is_invertible(const FpMatrix& m);

// A generating set of GL(h, F_p): for h = 1 the primitive root; for h >= 2 a
// primitive diagonal element together with a cycle-with-unipotent element.
// Generation is covered by closure tests at small sizes.
std::vector<GroupElement> gl_generators(u32 h, u32 p);

// Order of GL(h, F_p) = prod_{i=0}^{h-1} (p^h - p^i).
u64 gl_order(u32 h, u32 p);

// Full group by closure from the generators; throws BudgetError-style
// std::runtime_error when the order exceeds max_elements.
std::vector<GroupElement> gl_closure(const std::vector<GroupElement>& gens,
                                     std::size_t max_elements);

// Matrix of the action induced on the quotient: column for quotient monomial
// m is reduce(substitute_linear(m, a), q).
FpMatrix induced_action(const QuotientPresentation& q, const GroupElement& a);

enum class InvariantMethod { Generators, FullGroup };

struct InvariantReport {
  u32 p = 3;
  u32 h = 1;
  u64 n = 0;
  InvariantMethod method = InvariantMethod::Generators;
  std::size_t quotient_dim = 0;
  std::vector<std::vector<u32>> basis;  // fixed vectors in quotient coordinates
  std::vector<GroupElement> elements_used;

  std::size_t dim() const { return basis.size(); }
  nlohmann::ordered_json to_json() const;
};

// Fixed points of GL(h,F_p) on the degree-n quotient: the intersection of
// ker(induced_action(A) - I) over the chosen element set. No averaging is
// ever used (p divides the group order).
InvariantReport invariant_subspace(u32 p, u32 h, u64 n, InvariantMethod method,
                                   std::size_t group_budget = 200000);

}  // namespace hitp
