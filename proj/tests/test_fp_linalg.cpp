#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hitproblem/linalg.hpp"

using namespace hitp;

namespace {

FpMatrix make(u32 p, std::size_t r, std::size_t c, std::vector<u32> entries) {
  FpMatrix m(p, r, c);
  m.a = std::move(entries);
  return m;
}

// Brute-force oracle: all vectors over F_p of a given length.
std::vector<std::vector<u32>> all_vectors(u32 p, std::size_t len) {
  std::vector<std::vector<u32>> out;
  std::vector<u32> v(len, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < len && ++v[i] == p) v[i++] = 0;
    if (i == len) break;
  }
  return out;
}

FpMatrix random_matrix(std::mt19937& rng, u32 p, std::size_t r, std::size_t c) {
  FpMatrix m(p, r, c);
  for (auto& x : m.a) x = rng() % p;
  return m;
}

}  // namespace

TEST_CASE("modular scalar arithmetic") {
  CHECK(add_mod(2, 2, 3) == 1);
  CHECK(sub_mod(0, 1, 5) == 4);
  CHECK(mul_mod(3, 4, 5) == 2);
  CHECK(pow_mod(2, 4, 5) == 1);
  for (u32 p : {3u, 5u, 7u, 11u})
    for (u32 a = 1; a < p; ++a) CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
  CHECK_THROWS_AS(inv_mod(0, 5), std::domain_error);
}

TEST_CASE("odd prime validation") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(97));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_FALSE(is_odd_prime(1));
  CHECK_THROWS_AS(require_odd_prime(4), std::invalid_argument);
  CHECK_THROWS_AS(RowReducer(6, 3), std::invalid_argument);
}

TEST_CASE("primitive roots generate F_p^x") {
  for (u32 p : {3u, 5u, 7u, 13u}) {
    u32 g = primitive_root(p);
    std::vector<bool> seen(p, false);
    u32 x = 1;
    for (u32 i = 0; i < p - 1; ++i) {
      seen[x] = true;
      x = mul_mod(x, g, p);
    }
    for (u32 v = 1; v < p; ++v) CHECK(seen[v]);
  }
}

TEST_CASE("rref: p=3 dependent rows") {
  // row2 = 2*row1 mod 3, re-checked by hand row operations
  auto r = rref(make(3, 2, 2, {1, 2, 2, 1}));
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
  CHECK(r.reduced == make(3, 2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref: identity and zero") {
  auto id = FpMatrix::identity(5, 3);
  auto r = rref(id);
  CHECK(r.rank == 3);
  CHECK(r.reduced == id);

  auto z = rref(FpMatrix(5, 2, 4));
  CHECK(z.rank == 0);
  CHECK(z.pivot_cols.empty());
  CHECK(z.reduced == FpMatrix(5, 2, 4));
}

TEST_CASE("rref preserves the row space and is idempotent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    u32 p = trial % 2 ? 3 : 5;
    FpMatrix m = random_matrix(rng, p, 1 + rng() % 5, 1 + rng() % 5);
    auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);

    // mutual membership via solve on transposes: every row of one lies in
    // the row space of the other
    auto row_in_span = [&](const FpMatrix& span, const std::vector<u32>& row) {
      FpMatrix t(span.p, span.cols, span.rows);
      for (std::size_t i = 0; i < span.rows; ++i)
        for (std::size_t j = 0; j < span.cols; ++j) t.at(j, i) = span.at(i, j);
      return solve(t, row).has_value();
    };
    for (std::size_t i = 0; i < m.rows; ++i) {
      CHECK(row_in_span(r.reduced, m.row(i)));
      CHECK(row_in_span(m, r.reduced.row(i)));
    }
    CHECK(r.rank + cokernel_complement(m, m.cols).size() == m.cols);
  }
}

TEST_CASE("solve: 1x1 and degenerate") {
  CHECK(solve(make(5, 1, 1, {1}), {3}) == std::vector<u32>{3});
  auto x = solve(make(3, 1, 1, {0}), {0});
  REQUIRE(x.has_value());
  CHECK(mat_vec(make(3, 1, 1, {0}), *x) == std::vector<u32>{0});
}

TEST_CASE("solve: inconsistent system, brute-force oracle") {
  FpMatrix a = make(3, 2, 2, {1, 1, 2, 2});
  std::vector<u32> b{1, 1};
  // enumerate all 9 candidates over F_3: none satisfies a*x = b
  for (const auto& x : all_vectors(3, 2)) CHECK(mat_vec(a, x) != b);
  CHECK_FALSE(solve(a, b).has_value());
}

TEST_CASE("solve: random systems satisfy a*x = b exactly") {
  std::mt19937 rng(7);
  int consistent = 0;
  for (int trial = 0; trial < 100; ++trial) {
    u32 p = trial % 2 ? 3 : 7;
    FpMatrix a = random_matrix(rng, p, 1 + rng() % 4, 1 + rng() % 4);
    std::vector<u32> b(a.rows);
    for (auto& v : b) v = rng() % p;
    if (auto x = solve(a, b)) {
      CHECK(mat_vec(a, *x) == b);
      ++consistent;
    }
  }
  CHECK(consistent > 0);
  CHECK_THROWS_AS(solve(make(3, 2, 2, {1, 0, 0, 1}), {1}), std::invalid_argument);
}

TEST_CASE("cokernel_complement examples") {
  // non-pivot columns; images of e1, e2 independent mod span by rref
  CHECK(cokernel_complement(make(3, 1, 3, {1, 0, 2}), 3) ==
        std::vector<std::size_t>{1, 2});
  CHECK(cokernel_complement(FpMatrix(5, 0, 4), 4) ==
        std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(cokernel_complement(FpMatrix::identity(3, 4), 4).empty());
}

TEST_CASE("kernel_basis spans exactly the kernel") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    u32 p = 3;
    FpMatrix m = random_matrix(rng, p, 1 + rng() % 3, 1 + rng() % 4);
    auto basis = kernel_basis(m);
    for (const auto& v : basis)
      CHECK(mat_vec(m, v) == std::vector<u32>(m.rows, 0));
    // dimension check against brute force when small
    if (m.cols <= 4) {
      std::size_t count = 0;
      for (const auto& x : all_vectors(p, m.cols))
        if (mat_vec(m, x) == std::vector<u32>(m.rows, 0)) ++count;
      std::size_t expect = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) expect *= p;
      CHECK(count == expect);
    }
  }
}

TEST_CASE("RowReducer reduce leaves the row space invariant") {
  RowReducer red(5, 4);
  red.add_row({1, 2, 3, 4});
  red.add_row({0, 1, 1, 0});
  CHECK(red.rank() == 2);
  CHECK(red.contains({1, 3, 4, 4}));  // sum of the two rows
  CHECK_FALSE(red.contains({0, 0, 1, 0}));
  auto rem = red.reduce({1, 3, 4, 4});
  CHECK(rem == std::vector<u32>{0, 0, 0, 0});
}
