#pragma once

#include <cstddef>
#include <vector>

#include "foliaquant/expr.hpp"
#include "foliaquant/zero_test.hpp"

namespace fq {

/// Dense square or rectangular matrix of expressions, row major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Expr& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Expr& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Expr> data_;
};

Expr determinant(const Matrix& m, const ZeroTestOptions& options = {});
/// Throws DegenerateStructureError for a singular matrix and
/// InconclusiveError when a pivot cannot be decided.
Matrix inverse(const Matrix& m, const ZeroTestOptions& options = {});
std::size_t rank(const Matrix& m, const ZeroTestOptions& options = {});

}  // namespace fq
