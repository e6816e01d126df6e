#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nildga/rational.hpp"

namespace nildga {

/// Dense matrix over Q(i) with exact Gauss elimination.  Sizes in this
/// library stay tiny (dimensions of bigraded blocks), so no pivoting
/// strategy beyond first-nonzero is needed.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<GaussianRational>(cols)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const { return a_[r][c]; }

  Matrix conj_transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.a_[c][r] = a_[r][c].conj();
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.a_[c][r] = a_[r][c];
    return m;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix m(x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x.a_[r][k].is_zero()) continue;
        for (std::size_t c = 0; c < y.cols_; ++c) m.a_[r][c] += x.a_[r][k] * y.a_[k][c];
      }
    return m;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix m = x;
    for (std::size_t r = 0; r < m.rows_; ++r)
      for (std::size_t c = 0; c < m.cols_; ++c) m.a_[r][c] += y.a_[r][c];
    return m;
  }

  std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<GaussianRational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!a_[r][c].is_zero()) out[r] += a_[r][c] * v[c];
    return out;
  }

  /// Stacks x on top of y (same column count).
  static Matrix vstack(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.cols_) throw std::invalid_argument("Matrix: vstack column mismatch");
    Matrix m(x.rows_ + y.rows_, x.cols_);
    m.a_ = x.a_;
    m.a_.insert(m.a_.end(), y.a_.begin(), y.a_.end());
    return m;
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && a_[sel][col].is_zero()) ++sel;
      if (sel == rows_) continue;
      std::swap(a_[sel], a_[row]);
      GaussianRational inv = GaussianRational(1) / a_[row][col];
      for (std::size_t c = col; c < cols_; ++c) a_[row][c] *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || a_[r][col].is_zero()) continue;
        GaussianRational f = a_[r][col];
        for (std::size_t c = col; c < cols_; ++c) a_[r][c] -= f * a_[row][c];
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of the right null space, one vector per free column, with a 1 in
  /// the free position.  Deterministic given the column order.
  std::vector<std::vector<GaussianRational>> null_space() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<GaussianRational> v(cols_);
      v[free] = GaussianRational(1);
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.a_[k][free];
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// One solution of A x = b, or nullopt when inconsistent.
  std::optional<std::vector<GaussianRational>> solve(const std::vector<GaussianRational>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("Matrix: rhs length mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug.a_[r][c] = a_[r][c];
      aug.a_[r][cols_] = b[r];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<GaussianRational> x(cols_);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.a_[k][cols_];
    return x;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<GaussianRational>> a_;
};

}  // namespace nildga
