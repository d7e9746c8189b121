#include "hitproblem/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hitp {

FpMatrix FpMatrix::identity(u32 p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols != b.rows || a.p != b.p) throw std::invalid_argument("mat_mul: shape mismatch");
  FpMatrix c(a.p, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      u32 v = a.at(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.at(i, j) = add_mod(c.at(i, j), mul_mod(v, b.at(k, j), a.p), a.p);
    }
  return c;
}

std::vector<u32> mat_vec(const FpMatrix& a, const std::vector<u32>& x) {
  if (a.cols != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  std::vector<u32> y(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < a.cols; ++j) acc += static_cast<u64>(a.at(i, j)) * x[j];
    y[i] = static_cast<u32>(acc % a.p);
  }
  return y;
}

RowReducer::RowReducer(u32 p, std::size_t cols) : p_(p), cols_(cols), pivot_row_(cols, -1) {
  require_odd_prime(p);
}

std::vector<u32> RowReducer::reduce(std::vector<u32> row) const {
  if (row.size() != cols_) throw std::invalid_argument("RowReducer: row width mismatch");
  // Rows are in RREF, so one left-to-right pass fully reduces.
  for (std::size_t c = 0; c < cols_; ++c) {
    u32 v = row[c];
    if (!v || pivot_row_[c] < 0) continue;
    const auto& b = rows_[static_cast<std::size_t>(pivot_row_[c])];
    u32 neg = p_ - v;
    for (std::size_t j = c; j < cols_; ++j)
      if (b[j]) row[j] = add_mod(row[j], mul_mod(neg, b[j], p_), p_);
  }
  return row;
}

bool RowReducer::contains(const std::vector<u32>& row) const {
  auto r = reduce(row);
  return std::all_of(r.begin(), r.end(), [](u32 v) { return v == 0; });
}

bool RowReducer::add_row(std::vector<u32> row) {
  row = reduce(std::move(row));
  std::size_t c = 0;
  while (c < cols_ && row[c] == 0) ++c;
  if (c == cols_) return false;
  u32 inv = inv_mod(row[c], p_);
  for (std::size_t j = c; j < cols_; ++j) row[j] = mul_mod(row[j], inv, p_);
  // clear column c in the existing rows to keep the basis fully reduced
  for (auto& b : rows_) {
    u32 v = b[c];
    if (!v) continue;
    u32 neg = p_ - v;
    for (std::size_t j = c; j < cols_; ++j)
      if (row[j]) b[j] = add_mod(b[j], mul_mod(neg, row[j], p_), p_);
  }
  pivot_row_[c] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::vector<std::size_t> RowReducer::pivot_cols() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] >= 0) out.push_back(c);
  return out;
}

FpMatrix RowReducer::to_matrix() const {
  FpMatrix m(p_, rows_.size(), cols_);
  std::size_t i = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_row_[c] < 0) continue;
    const auto& r = rows_[static_cast<std::size_t>(pivot_row_[c])];
    std::copy(r.begin(), r.end(), m.a.begin() + static_cast<std::ptrdiff_t>(i * cols_));
    ++i;
  }
  return m;
}

RrefResult rref(const FpMatrix& m) {
  RowReducer red(m.p, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) red.add_row(m.row(i));
  RrefResult res;
  res.pivot_cols = red.pivot_cols();
  res.rank = red.rank();
  // Same shape as the input, zero rows at the bottom.
  res.reduced = FpMatrix(m.p, m.rows, m.cols);
  FpMatrix top = red.to_matrix();
  std::copy(top.a.begin(), top.a.end(), res.reduced.a.begin());
  return res;
}

std::optional<std::vector<u32>> solve(const FpMatrix& a, const std::vector<u32>& b) {
  if (b.size() != a.rows) throw std::invalid_argument("solve: rhs size mismatch");
  RowReducer red(a.p, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    std::vector<u32> row = a.row(i);
    row.push_back(b[i] % a.p);
    red.add_row(std::move(row));
  }
  auto pivots = red.pivot_cols();
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
  FpMatrix r = red.to_matrix();
  std::vector<u32> x(a.cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, a.cols);
  return x;
}

std::vector<std::size_t> cokernel_complement(const FpMatrix& span_rows, std::size_t ambient_dim) {
  if (span_rows.rows > 0 && span_rows.cols != ambient_dim)
    throw std::invalid_argument("cokernel_complement: column count != ambient dimension");
  RowReducer red(span_rows.p, ambient_dim);
  for (std::size_t i = 0; i < span_rows.rows; ++i) red.add_row(span_rows.row(i));
  auto pivots = red.pivot_cols();
  std::vector<std::size_t> out;
  std::size_t pi = 0;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (pi < pivots.size() && pivots[pi] == c)
      ++pi;
    else
      out.push_back(c);
  }
  return out;
}

std::vector<std::vector<u32>> kernel_basis(const FpMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<u32>> basis;
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<u32> v(m.cols, 0);
    v[j] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = neg_mod(r.reduced.at(i, j), m.p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hitp
