#include "hitproblem/fp.hpp"

#include <vector>

namespace hitp {

bool is_odd_prime(u32 p) {
  if (p < 3 || p % 2 == 0) return false;
  for (u32 d = 3; static_cast<u64>(d) * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(u32 p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("modulus must be an odd prime >= 3");
}

u32 pow_mod(u32 a, u64 e, u32 p) {
  u32 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u32 inv_mod(u32 a, u32 p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

u32 primitive_root(u32 p) {
  require_odd_prime(p);
  // factor p-1
  std::vector<u32> factors;
  u32 m = p - 1;
  for (u32 d = 2; static_cast<u64>(d) * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u32 g = 2; g < p; ++g) {
    bool ok = true;
    for (u32 q : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");  // unreachable for prime p
}

}  // namespace hitp
