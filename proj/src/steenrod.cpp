#include "hitproblem/steenrod.hpp"

#include <algorithm>

namespace hitp {

u32 lucas_binom(u64 n, u64 k, u32 p) {
  require_odd_prime(p);
  if (k > n) return 0;
  u32 result = 1;
  while (k > 0 || n > 0) {
    u64 nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) with nd, kd < p fits easily in u64
    u64 num = 1, den = 1;
    for (u64 i = 1; i <= kd; ++i) {
      num = num * (nd + 1 - i) % p;
      den = den * i % p;
    }
    result = mul_mod(result, mul_mod(static_cast<u32>(num), inv_mod(static_cast<u32>(den), p), p), p);
    n /= p;
    k /= p;
  }
  return result;
}

Polynomial reduced_power(const Monomial& m, u32 k, u32 p, u32 h) {
  if (m.vars() != h) throw std::invalid_argument("monomial has wrong variable count");
  Polynomial out(p, h);
  if (k > m.polydeg()) return out;  // unstability
  // Compositions k = k_1 + ... + k_h with k_i <= a_i, coefficient
  // prod C(a_i, k_i), exponent a_i + k_i (p - 1).
  Monomial img = m;
  auto rec = [&](auto&& self, std::size_t i, u32 rest, u32 coeff) -> void {
    if (!coeff) return;
    if (i + 1 == h) {
      if (rest > m.e[i]) return;
      u32 c = mul_mod(coeff, lucas_binom(m.e[i], rest, p), p);
      if (!c) return;
      img.e[i] = m.e[i] + rest * (p - 1);
      out.add_term(img, c);
      img.e[i] = m.e[i];
      return;
    }
    u32 cap = std::min<u32>(rest, m.e[i]);
    for (u32 ki = 0; ki <= cap; ++ki) {
      img.e[i] = m.e[i] + ki * (p - 1);
      self(self, i + 1, rest - ki, mul_mod(coeff, lucas_binom(m.e[i], ki, p), p));
    }
    img.e[i] = m.e[i];
  };
  rec(rec, 0, k, 1);
  return out;
}

Polynomial reduced_power(const Polynomial& f, u32 k) {
  if (k == 0) return f;
  Polynomial out(f.p(), f.vars());
  for (const auto& [m, c] : f.terms())
    out = out + reduced_power(m, k, f.p(), f.vars()).scaled(c);
  return out;
}

bool cartan_check(const Polynomial& f, const Polynomial& g, u32 k) {
  Polynomial lhs = reduced_power(f * g, k);
  Polynomial rhs(f.p(), f.vars());
  for (u32 i = 0; i <= k; ++i) rhs = rhs + reduced_power(f, i) * reduced_power(g, k - i);
  return lhs == rhs;
}

Polynomial HitDecomposition::evaluate() const {
  Polynomial sum(p, h);
  for (const auto& [k, fk] : parts) {
    if (k == 0) throw std::logic_error("hit decomposition may not use P^0");
    sum = sum + reduced_power(fk, k);
  }
  return sum;
}

HitDecomposition pth_power_witness(const Polynomial& g) {
  if (!g.is_homogeneous()) throw std::invalid_argument("pth_power_witness: g must be homogeneous");
  u64 d = g.polydeg();
  if (g.is_zero() || d == 0)
    throw std::invalid_argument("pth_power_witness: g must have positive degree");
  HitDecomposition w(g.p(), g.vars());
  w.target = g.pow(g.p());
  w.parts.emplace(static_cast<u32>(d), g);
  if (!w.verify()) throw std::logic_error("p-th power identity failed; engine bug");
  return w;
}

}  // namespace hitp
