#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hitproblem/fp.hpp"

namespace hitp {

// Dense matrix over F_p, row major.
struct FpMatrix {
  u32 p = 3;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<u32> a;

  FpMatrix() = default;
  FpMatrix(u32 p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}

  u32& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  u32 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  std::vector<u32> row(std::size_t i) const {
    return {a.begin() + static_cast<std::ptrdiff_t>(i * cols),
            a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)};
  }

  static FpMatrix identity(u32 p, std::size_t n);

  bool operator==(const FpMatrix&) const = default;
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
std::vector<u32> mat_vec(const FpMatrix& a, const std::vector<u32>& x);

// Incremental reduced-row-echelon builder. Stored rows are kept fully
// reduced against each other with pivot entries normalized to 1, so the
// row set is always the RREF of everything inserted so far.
class RowReducer {
 public:
  RowReducer(u32 p, std::size_t cols);

  // Reduces `row` against the basis and inserts the remainder if nonzero.
  // Returns true when the rank grew.
  bool add_row(std::vector<u32> row);

  // Remainder of `row` modulo the current row space.
  std::vector<u32> reduce(std::vector<u32> row) const;

  bool contains(const std::vector<u32>& row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  u32 modulus() const { return p_; }

  // Pivot columns in increasing order.
  std::vector<std::size_t> pivot_cols() const;

  // RREF rows ordered by pivot column.
  FpMatrix to_matrix() const;

 private:
  u32 p_;
  std::size_t cols_;
  std::vector<std::vector<u32>> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index, -1 if free
};

struct RrefResult {
  FpMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

RrefResult rref(const FpMatrix& m);

// Some x with a*x = b, or nullopt when inconsistent.
std::optional<std::vector<u32>> solve(const FpMatrix& a, const std::vector<u32>& b);

// Indices of standard coordinates whose images form a basis of
// F_p^ambient_dim / rowspace(span_rows): the non-pivot columns.
std::vector<std::size_t> cokernel_complement(const FpMatrix& span_rows, std::size_t ambient_dim);

// Basis of { x : m*x = 0 }.
std::vector<std::vector<u32>> kernel_basis(const FpMatrix& m);

}  // namespace hitp
