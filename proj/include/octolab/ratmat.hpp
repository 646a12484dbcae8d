#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "octolab/rational.hpp"

namespace octolab {

/// Dense matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMatrix&) const = default;

  RatMatrix operator+(const RatMatrix& o) const {
    check_same_shape(o);
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }
  RatMatrix operator-(const RatMatrix& o) const {
    check_same_shape(o);
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }
  RatMatrix operator*(const Rat& s) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
  }
  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("matrix product shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Rat& b = o(k, j);
          if (b != 0) r(i, j) += a * b;
        }
      }
    return r;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }
  bool is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::domain_error("matrix apply shape mismatch");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  std::vector<Rat> flatten() const { return data_; }

  static RatMatrix from_flat(std::size_t rows, std::size_t cols, const std::vector<Rat>& v) {
    if (v.size() != rows * cols) throw std::domain_error("flat vector shape mismatch");
    RatMatrix m(rows, cols);
    m.data_ = v;
    return m;
  }

 private:
  void check_same_shape(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

inline RatMatrix bracket(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(std::vector<std::vector<Rat>>& rows) {
  std::vector<std::size_t> pivots;
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t pr = m;
    for (std::size_t i = r; i < m; ++i)
      if (rows[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr == m) continue;
    std::swap(rows[r], rows[pr]);
    const Rat pv = rows[r][c];
    if (pv != 1)
      for (auto& x : rows[r]) x /= pv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(std::vector<std::vector<Rat>> rows) {
  return rref_in_place(rows).size();
}

/// Nullspace basis of the homogeneous system rows * x = 0 (rows are equations).
inline std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows[0].size();
  const auto pivots = rref_in_place(rows);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[fc] = 1;
    for (std::size_t ri = 0; ri < pivots.size(); ++ri) v[pivots[ri]] = -rows[ri][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Incremental exact span: rows kept in reduced echelon form.
class RowSpan {
 public:
  explicit RowSpan(std::size_t width) : width_(width) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t width() const { return width_; }

  /// Reduces v against the span; returns the residue (zero iff v is in the span).
  std::vector<Rat> reduce(std::vector<Rat> v) const {
    if (v.size() != width_) throw std::domain_error("row width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  bool contains(const std::vector<Rat>& v) const {
    auto w = reduce(v);
    for (const auto& x : w)
      if (x != 0) return false;
    return true;
  }

  /// Inserts v if independent; returns true when the dimension grew.
  bool insert(const std::vector<Rat>& v) {
    auto w = reduce(v);
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j)
      if (w[j] != 0) {
        p = j;
        break;
      }
    if (p == width_) return false;
    const Rat pv = w[p];
    for (auto& x : w) x /= pv;
    // back-substitute into existing rows to keep the reduced form
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat f = rows_[i][p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (w[j] != 0) rows_[i][j] -= f * w[j];
    }
    // keep rows ordered by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(w));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

 private:
  std::size_t width_;
  std::vector<std::vector<Rat>> rows_;    // reduced echelon rows
  std::vector<std::size_t> pivots_;
};

/// Exact solve of cols * x = rhs where cols[k] are column vectors.
/// Returns nullopt when inconsistent; requires a unique solution otherwise.
inline std::optional<std::vector<Rat>> solve_columns(const std::vector<std::vector<Rat>>& cols,
                                                     const std::vector<Rat>& rhs) {
  const std::size_t n = cols.size();
  const std::size_t m = rhs.size();
  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(n + 1, Rat(0)));
  for (std::size_t k = 0; k < n; ++k) {
    if (cols[k].size() != m) throw std::domain_error("column length mismatch");
    for (std::size_t i = 0; i < m; ++i) aug[i][k] = cols[k][i];
  }
  for (std::size_t i = 0; i < m; ++i) aug[i][n] = rhs[i];
  const auto pivots = rref_in_place(aug);
  for (auto c : pivots)
    if (c == n) return std::nullopt;  // inconsistent
  if (pivots.size() != n) return std::nullopt;  // underdetermined
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t ri = 0; ri < pivots.size(); ++ri) x[pivots[ri]] = aug[ri][n];
  return x;
}

}  // namespace octolab
