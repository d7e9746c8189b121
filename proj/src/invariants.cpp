#include "hitproblem/invariants.hpp"

#include <algorithm>
#include <set>

namespace hitp {

u32 det_mod(const FpMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of a non-square matrix");
  // Gaussian elimination tracking the product of pivots.
  FpMatrix a = m;
  u32 det = 1;
  std::size_t n = a.rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = neg_mod(det, a.p);
    }
    det = mul_mod(det, a.at(c, c), a.p);
    u32 inv = inv_mod(a.at(c, c), a.p);
    for (std::size_t i = c + 1; i < n; ++i) {
      u32 f = mul_mod(a.at(i, c), inv, a.p);
      if (!f) continue;
      u32 neg = a.p - f;
      for (std::size_t j = c; j < n; ++j)
        a.at(i, j) = add_mod(a.at(i, j), mul_mod(neg, a.at(c, j), a.p), a.p);
    }
  }
  return det;
}

bool is_invertible(const FpMatrix& m) { return det_mod(m) != 0; }

std::vector<GroupElement> gl_generators(u32 h, u32 p) {
  require_odd_prime(p);
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  u32 g = primitive_root(p);
  if (h == 1) {
    FpMatrix d(p, 1, 1);
    d.at(0, 0) = g;
    return {d};
  }
  FpMatrix diag = FpMatrix::identity(p, h);
  diag.at(0, 0) = g;
  // Cycle e_1 -> e_2 -> ... -> e_h -> e_1 with a unipotent tweak
  // e_h -> e_1 + e_2; together with the diagonal this generates GL(h, F_p)
  // (covered by closure tests at small sizes).
  FpMatrix cyc(p, h, h);
  for (u32 j = 0; j + 1 < h; ++j) cyc.at(j + 1, j) = 1;
  cyc.at(0, h - 1) = 1;
  cyc.at(1, h - 1) = add_mod(cyc.at(1, h - 1), 1, p);
  return {diag, cyc};
}

u64 gl_order(u32 h, u32 p) {
  u64 ph = 1;
  for (u32 i = 0; i < h; ++i) ph *= p;
  u64 order = 1, pi = 1;
  for (u32 i = 0; i < h; ++i) {
    order *= ph - pi;
    pi *= p;
  }
  return order;
}

std::vector<GroupElement> gl_closure(const std::vector<GroupElement>& gens,
                                     std::size_t max_elements) {
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  auto less = [](const FpMatrix& a, const FpMatrix& b) { return a.a < b.a; };
  std::set<FpMatrix, decltype(less)> seen(less);
  std::vector<GroupElement> order;
  std::vector<GroupElement> frontier{FpMatrix::identity(gens.front().p, gens.front().rows)};
  seen.insert(frontier.front());
  order.push_back(frontier.front());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        FpMatrix b = mat_mul(g, a);
        if (seen.insert(b).second) {
          if (order.size() >= max_elements)
            throw BudgetError("group closure exceeds budget of " +
                                     std::to_string(max_elements) + " elements");
          order.push_back(b);
          next.push_back(std::move(b));
        }
      }
    frontier = std::move(next);
  }
  return order;
}

FpMatrix induced_action(const QuotientPresentation& q, const GroupElement& a) {
  if (a.rows != q.h || a.cols != q.h || a.p != q.p)
    throw std::invalid_argument("group element must be h x h over the quotient's p");
  FpMatrix m(q.p, q.dim(), q.dim());
  for (std::size_t j = 0; j < q.dim(); ++j) {
    Polynomial image =
        substitute_linear(Polynomial::from_monomial(q.p, q.h, q.quotient_monomials[j]), a);
    std::vector<u32> col = reduce(image, q);
    for (std::size_t i = 0; i < q.dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

nlohmann::ordered_json InvariantReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["p"] = p;
  j["h"] = h;
  j["n"] = n;
  j["method"] = method == InvariantMethod::Generators ? "generators" : "full-group";
  j["quotient_dim"] = quotient_dim;
  j["dim"] = basis.size();
  j["basis"] = basis;
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (const auto& e : elements_used) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < e.rows; ++i) rows.push_back(e.row(i));
    elems.push_back(std::move(rows));
  }
  j["elements_used"] = std::move(elems);
  return j;
}

InvariantReport invariant_subspace(u32 p, u32 h, u64 n, InvariantMethod method,
                                   std::size_t group_budget) {
  InvariantReport rep;
  rep.p = p;
  rep.h = h;
  rep.n = n;
  rep.method = method;
  QuotientPtr q = quotient(p, h, n);
  rep.quotient_dim = q->dim();

  std::vector<GroupElement> gens = gl_generators(h, p);
  if (method == InvariantMethod::FullGroup) {
    if (gl_order(h, p) > group_budget)
      throw BudgetError("full-group method: |GL(" + std::to_string(h) + ",F_" +
                               std::to_string(p) + ")| = " + std::to_string(gl_order(h, p)) +
                               " exceeds budget " + std::to_string(group_budget));
    rep.elements_used = gl_closure(gens, group_budget);
  } else {
    rep.elements_used = gens;
  }
  if (q->dim() == 0) return rep;

  // Fixed points: stack (M_A - I) over the element set and take the kernel.
  std::size_t d = q->dim();
  FpMatrix stacked(p, rep.elements_used.size() * d, d);
  std::size_t r0 = 0;
  for (const auto& a : rep.elements_used) {
    FpMatrix m = induced_action(*q, a);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        stacked.at(r0 + i, j) = sub_mod(m.at(i, j), i == j ? 1u : 0u, p);
    r0 += d;
  }
  rep.basis = kernel_basis(stacked);
  return rep;
}

}  // namespace hitp
