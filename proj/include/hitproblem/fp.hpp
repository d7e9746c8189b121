#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hitp {

// Raised when a computation would exceed a configured resource bound.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_odd_prime(u32 p);

// Throws std::invalid_argument unless p is an odd prime >= 3.
void require_odd_prime(u32 p);

inline u32 add_mod(u32 a, u32 b, u32 p) {
  u32 s = a + b;
  return s >= p ? s - p : s;
}

inline u32 sub_mod(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }

inline u32 mul_mod(u32 a, u32 b, u32 p) {
  return static_cast<u32>(static_cast<u64>(a) * b % p);
}

inline u32 neg_mod(u32 a, u32 p) { return a ? p - a : 0; }

u32 pow_mod(u32 a, u64 e, u32 p);

// Inverse of a nonzero residue; throws std::domain_error on zero.
u32 inv_mod(u32 a, u32 p);

// Smallest generator of the multiplicative group F_p^x.
u32 primitive_root(u32 p);

}  // namespace hitp
