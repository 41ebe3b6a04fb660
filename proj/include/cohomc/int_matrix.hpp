#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cohomc/errors.hpp"

namespace cohomc {

/// Dense row-major integer matrix. Sizes here are tiny (d <= 4), so
/// determinants and adjugates are computed by cofactor expansion.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
  }

  /// Permutation matrix sending e_j to e_{perm[j]}.
  static IntMatrix permutation(std::span<const std::size_t> perm) {
    IntMatrix m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::int64_t> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const {
    if (v.size() != cols_) throw DimensionMismatch(cols_, v.size());
    std::vector<std::int64_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch(a.cols_, b.rows_);
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
    return m;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::int64_t determinant() const {
    if (!square()) throw InvalidArgument("determinant of a non-square matrix");
    if (rows_ == 0) return 1;
    if (rows_ == 1) return data_[0];
    std::int64_t det = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::int64_t a = (*this)(0, j);
      if (a == 0) continue;
      const std::int64_t minor = without(0, j).determinant();
      det += (j % 2 == 0 ? 1 : -1) * a * minor;
    }
    return det;
  }

  /// Classical adjoint: A * adj(A) = det(A) * I.
  IntMatrix adjugate() const {
    if (!square()) throw InvalidArgument("adjugate of a non-square matrix");
    IntMatrix adj(rows_, cols_);
    if (rows_ == 1) {
      adj(0, 0) = 1;
      return adj;
    }
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        adj(j, i) = ((i + j) % 2 == 0 ? 1 : -1) * without(i, j).determinant();
    return adj;
  }

  bool unimodular() const { return square() && (determinant() == 1 || determinant() == -1); }

  /// Exact inverse of a unimodular matrix.
  IntMatrix unimodular_inverse() const {
    const std::int64_t det = determinant();
    if (det != 1 && det != -1) throw InvalidArgument("matrix is not unimodular (det " + std::to_string(det) + ")");
    IntMatrix inv = adjugate();
    if (det == -1)
      for (auto& x : inv.data_) x = -x;
    return inv;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + std::to_string((*this)(i, j));
      s += "]";
    }
    return s + "]";
  }

 private:
  IntMatrix without(std::size_t r, std::size_t c) const {
    IntMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace cohomc
