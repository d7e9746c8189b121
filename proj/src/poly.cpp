#include "hitproblem/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hitp {

u64 Monomial::polydeg() const { return std::accumulate(e.begin(), e.end(), u64{0}); }

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("grevlex: variable count mismatch");
  u64 da = a.polydeg(), db = b.polydeg();
  if (da != db) return da < db;
  // Equal degree: a < b iff at the rightmost difference a has the larger exponent.
  for (std::size_t i = a.vars(); i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

Polynomial::Polynomial(u32 p, u32 h) : p_(p), h_(h) {
  require_odd_prime(p);
  if (h < 1) throw std::invalid_argument("need at least one variable");
}

Polynomial Polynomial::constant(u32 p, u32 h, u32 c) {
  Polynomial f(p, h);
  f.add_term(Monomial(std::vector<u32>(h, 0)), c);
  return f;
}

Polynomial Polynomial::variable(u32 p, u32 h, u32 index) {
  if (index >= h) throw std::invalid_argument("variable index out of range");
  std::vector<u32> e(h, 0);
  e[index] = 1;
  return from_monomial(p, h, Monomial(std::move(e)));
}

Polynomial Polynomial::from_monomial(u32 p, u32 h, Monomial m, u32 c) {
  Polynomial f(p, h);
  f.add_term(m, c);
  return f;
}

void Polynomial::add_term(const Monomial& m, u32 c) {
  if (m.vars() != h_) throw std::invalid_argument("monomial has wrong variable count");
  c %= p_;
  if (!c) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = add_mod(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

u32 Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  u64 d = terms_.begin()->first.polydeg();
  for (const auto& [m, c] : terms_)
    if (m.polydeg() != d) return false;
  return true;
}

u64 Polynomial::topdeg() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous()) throw std::logic_error("topdeg of a non-homogeneous polynomial");
  return terms_.begin()->first.topdeg();
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (p_ != o.p_ || h_ != o.h_)
    throw std::invalid_argument("polynomials over different (p, h)");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, neg_mod(c, p_));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(p_, h_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (std::size_t i = 0; i < h_; ++i) m.e[i] += m2.e[i];
      r.add_term(m, mul_mod(c1, c2, p_));
    }
  return r;
}

Polynomial Polynomial::scaled(u32 c) const {
  Polynomial r(p_, h_);
  c %= p_;
  for (const auto& [m, v] : terms_) r.add_term(m, mul_mod(v, c, p_));
  return r;
}

Polynomial Polynomial::pow(u64 e) const {
  Polynomial r = constant(p_, h_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

u64 monomial_count(u32 h, u64 n) {
  if (n % 2) throw std::invalid_argument("no odd topological degrees in P_h");
  u64 d = n / 2;
  // C(d + h - 1, h - 1)
  u64 r = 1;
  for (u32 i = 1; i < h; ++i) r = r * (d + i) / i;
  return r;
}

std::vector<Monomial> enumerate_monomials(u32 h, u64 n) {
  if (n % 2) throw std::invalid_argument("no odd topological degrees in P_h");
  u64 d = n / 2;
  std::vector<Monomial> out;
  std::vector<u32> e(h, 0);
  // Generate all compositions of d into h parts, then sort descending.
  auto rec = [&](auto&& self, std::size_t i, u64 rest) -> void {
    if (i + 1 == h) {
      e[i] = static_cast<u32>(rest);
      out.emplace_back(e);
      return;
    }
    for (u64 v = 0; v <= rest; ++v) {
      e[i] = static_cast<u32>(v);
      self(self, i + 1, rest - v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_less(b, a);
  });
  return out;
}

Polynomial substitute_linear(const Polynomial& f, const FpMatrix& m) {
  u32 h = f.vars();
  if (m.rows != h || m.cols != h || m.p != f.p())
    throw std::invalid_argument("substitution matrix must be h x h over the same p");
  // images of the variables: t_j -> sum_i m[i][j] t_i
  std::vector<Polynomial> image;
  image.reserve(h);
  for (u32 j = 0; j < h; ++j) {
    Polynomial g(f.p(), h);
    for (u32 i = 0; i < h; ++i) {
      std::vector<u32> e(h, 0);
      e[i] = 1;
      g.add_term(Monomial(std::move(e)), m.at(i, j));
    }
    image.push_back(std::move(g));
  }
  Polynomial r(f.p(), h);
  for (const auto& [mon, c] : f.terms()) {
    Polynomial term = Polynomial::constant(f.p(), h, c);
    for (u32 j = 0; j < h; ++j)
      if (mon.e[j]) term = term * image[j].pow(mon.e[j]);
    r = r + term;
  }
  return r;
}

std::vector<u32> coordinates(const Polynomial& f, const std::vector<Monomial>& ambient) {
  std::map<Monomial, std::size_t, GrevlexGreater> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], i);
  std::vector<u32> v(ambient.size(), 0);
  for (const auto& [m, c] : f.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::invalid_argument("polynomial term outside ambient list");
    v[it->second] = c;
  }
  return v;
}

Polynomial from_coordinates(u32 p, const std::vector<u32>& coords,
                            const std::vector<Monomial>& ambient, u32 h) {
  if (coords.size() != ambient.size())
    throw std::invalid_argument("coordinate/ambient size mismatch");
  Polynomial f(p, h);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) f.add_term(ambient[i], coords[i]);
  return f;
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.vars(); ++i) {
    if (!m.e[i]) continue;
    if (!first) os << '*';
    first = false;
    os << 't' << (i + 1);
    if (m.e[i] > 1) os << '^' << m.e[i];
  }
  if (first) os << '1';
  return os.str();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    bool is_const = m.polydeg() == 0;
    if (c != 1 || is_const) {
      os << c;
      if (!is_const) os << '*';
    }
    if (!is_const) os << to_string(m);
  }
  return os.str();
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  u32 p, h;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  u64 integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError(pos, "expected integer");
    u64 v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<u64>(s[pos] - '0');
      if (v > (u64{1} << 40)) throw ParseError(pos, "integer too large");
      ++pos;
    }
    return v;
  }

  // factor := integer | tN ['^' integer]
  void factor(Monomial& m, u32& coeff) {
    skip_ws();
    if (pos >= s.size()) throw ParseError(pos, "expected factor");
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = mul_mod(coeff, static_cast<u32>(integer() % p), p);
      return;
    }
    if (s[pos] != 't') throw ParseError(pos, "expected coefficient or variable tN");
    ++pos;
    u64 idx = integer();
    if (idx < 1 || idx > h) throw ParseError(pos, "variable index out of range 1.." + std::to_string(h));
    u64 exp = 1;
    if (eat('^')) exp = integer();
    m.e[idx - 1] += static_cast<u32>(exp);
  }

  // term := factor ('*' factor)*
  void term(Polynomial& f, u32 sign) {
    Monomial m(std::vector<u32>(h, 0));
    u32 coeff = 1;
    factor(m, coeff);
    while (eat('*')) factor(m, coeff);
    f.add_term(m, mul_mod(coeff, sign, p));
  }

  Polynomial parse() {
    Polynomial f(p, h);
    skip_ws();
    if (pos == s.size()) throw ParseError(pos, "empty polynomial");
    u32 sign = eat('-') ? p - 1 : 1;
    eat('+');
    term(f, sign);
    for (;;) {
      skip_ws();
      if (pos == s.size()) break;
      if (eat('+'))
        sign = 1;
      else if (eat('-'))
        sign = p - 1;
      else
        throw ParseError(pos, "expected '+' or '-'");
      term(f, sign);
    }
    return f;
  }
};

}  // namespace

Polynomial parse_polynomial(u32 p, u32 h, std::string_view text) {
  require_odd_prime(p);
  Parser parser{text, 0, p, h};
  return parser.parse();
}

}  // namespace hitp
