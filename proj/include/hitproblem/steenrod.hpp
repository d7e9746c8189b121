#pragma once

#include <map>

#include "hitproblem/poly.hpp"

namespace hitp {

// C(n, k) mod p by Lucas' theorem.
u32 lucas_binom(u64 n, u64 k, u32 p);

// P^k on a single monomial:
//   P^k(prod t_i^{a_i}) = sum_{k_1+...+k_h = k, k_i <= a_i}
//                         prod C(a_i, k_i) * prod t_i^{a_i + k_i(p-1)}.
// Zero when k exceeds the exponent sum (unstability).
Polynomial reduced_power(const Monomial& m, u32 k, u32 p, u32 h);

// Linear extension to polynomials. P^0 is the identity.
Polynomial reduced_power(const Polynomial& f, u32 k);

// Checks P^k(f*g) == sum_{i+j=k} P^i(f) * P^j(g), both sides expanded
// independently. A self-test oracle; must hold for all inputs.
bool cartan_check(const Polynomial& f, const Polynomial& g, u32 k);

// A decomposition f = sum_{k>=1} P^k(f_k).
struct HitDecomposition {
  u32 p;
  u32 h;
  Polynomial target;
  std::map<u32, Polynomial> parts;  // k -> f_k, k >= 1

  HitDecomposition(u32 p_, u32 h_) : p(p_), h(h_), target(p_, h_) {}

  Polynomial evaluate() const;
  bool verify() const { return evaluate() == target; }
};

// Witness for g^p = P^{polydeg g}(g). g must be homogeneous of positive
// degree; the identity is checked before the witness is returned.
HitDecomposition pth_power_witness(const Polynomial& g);

}  // namespace hitp
