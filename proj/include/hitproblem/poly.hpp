#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hitproblem/linalg.hpp"

namespace hitp {

// Exponent vector over h variables. Each variable has topological degree 2,
// so the topological degree of a monomial is twice its exponent sum.
struct Monomial {
  std::vector<u32> e;

  Monomial() = default;
  explicit Monomial(std::vector<u32> exps) : e(std::move(exps)) {}

  std::size_t vars() const { return e.size(); }
  u64 polydeg() const;
  u64 topdeg() const { return 2 * polydeg(); }

  bool operator==(const Monomial&) const = default;
};

// Graded reverse-lexicographic order with t1 > t2 > ... > th.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

// Sparse homogeneous-friendly polynomial over F_p[t1..th]. Terms are kept in
// descending grevlex order and never store zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, u32, GrevlexGreater>;

  Polynomial(u32 p, u32 h);

  static Polynomial zero(u32 p, u32 h) { return Polynomial(p, h); }
  static Polynomial constant(u32 p, u32 h, u32 c);
  static Polynomial variable(u32 p, u32 h, u32 index);  // 0-based
  static Polynomial from_monomial(u32 p, u32 h, Monomial m, u32 c = 1);

  u32 p() const { return p_; }
  u32 vars() const { return h_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Adds c * m into the polynomial.
  void add_term(const Monomial& m, u32 c);
  u32 coeff(const Monomial& m) const;

  bool is_homogeneous() const;
  // Topological degree of a homogeneous polynomial; 0 for the zero
  // polynomial (which is homogeneous of every degree).
  u64 topdeg() const;
  u64 polydeg() const { return topdeg() / 2; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(u32 c) const;
  Polynomial pow(u64 e) const;

  bool operator==(const Polynomial&) const = default;

 private:
  u32 p_;
  u32 h_;
  TermMap terms_;

  void check_compatible(const Polynomial& o) const;
};

// All monomials in h variables of topological degree n, descending grevlex.
// Throws std::invalid_argument on odd n.
std::vector<Monomial> enumerate_monomials(u32 h, u64 n);

// Count of the above: C(n/2 + h - 1, h - 1).
u64 monomial_count(u32 h, u64 n);

// Replace t_j by sum_i m[i][j] * t_i and expand. m must be h x h over f's p.
Polynomial substitute_linear(const Polynomial& f, const FpMatrix& m);

// Coordinates of a homogeneous f on an ambient monomial list (descending
// grevlex, as produced by enumerate_monomials).
std::vector<u32> coordinates(const Polynomial& f, const std::vector<Monomial>& ambient);

Polynomial from_coordinates(u32 p, const std::vector<u32>& coords,
                            const std::vector<Monomial>& ambient, u32 h);

// Text form, e.g. "3*t1^12*t2"; "0" for the zero polynomial.
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m);

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::size_t pos_, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(pos_)), pos(pos_) {}
};

// Parses "3*t1^2*t2 + t2^3 - 2". Whitespace insignificant. Coefficients are
// reduced mod p. Throws ParseError with position info.
Polynomial parse_polynomial(u32 p, u32 h, std::string_view text);

}  // namespace hitp
