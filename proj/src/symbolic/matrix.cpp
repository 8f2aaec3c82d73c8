#include "foliaquant/matrix.hpp"

#include <utility>

#include "foliaquant/errors.hpp"

namespace fq {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Expr(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DomainError("matrix shape mismatch");
  Matrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < other.cols_; ++c) {
      Expr s;
      for (std::size_t k = 0; k < cols_; ++k) s += (*this)(r, k) * other(k, c);
      p(r, c) = std::move(s);
    }
  }
  return p;
}

namespace {

// Pivot search in column `col` from row `from`: rational constants first
// (cheapest to divide by), then anything the zero test rejects as zero.
std::optional<std::size_t> find_pivot(const Matrix& m, std::size_t col, std::size_t from,
                                      const ZeroTestOptions& options) {
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (m(r, col).is_constant() && !m(r, col).is_structurally_zero()) return r;
  }
  bool undecided = false;
  for (std::size_t r = from; r < m.rows(); ++r) {
    Truth t = is_zero(m(r, col), options);
    if (t == Truth::fails) return r;
    if (t == Truth::inconclusive) undecided = true;
  }
  if (undecided) throw InconclusiveError("cannot decide a pivot in column " + std::to_string(col));
  return std::nullopt;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

Expr determinant(const Matrix& input, const ZeroTestOptions& options) {
  if (input.rows() != input.cols()) throw DomainError("determinant of a non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  Expr det(1);
  for (std::size_t col = 0; col < n; ++col) {
    auto pivot = find_pivot(m, col, col, options);
    if (!pivot) return Expr(0);
    if (*pivot != col) {
      swap_rows(m, *pivot, col);
      det = -det;
    }
    const Expr p = m(col, col);
    det *= p;
    const Expr inv = p.inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_structurally_zero()) continue;
      const Expr f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

Matrix inverse(const Matrix& input, const ZeroTestOptions& options) {
  if (input.rows() != input.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = input.rows();
  Matrix m = input;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    auto pivot = find_pivot(m, col, col, options);
    if (!pivot) throw DegenerateStructureError("singular matrix");
    swap_rows(m, *pivot, col);
    swap_rows(inv, *pivot, col);
    const Expr p = m(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) *= p;
      inv(col, c) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_structurally_zero()) continue;
      const Expr f = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= f * m(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::size_t rank(const Matrix& input, const ZeroTestOptions& options) {
  Matrix m = input;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    auto pivot = find_pivot(m, col, row, options);
    if (!pivot) continue;
    swap_rows(m, *pivot, row);
    const Expr inv = m(row, col).inverse();
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_structurally_zero()) continue;
      const Expr f = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    ++row;
  }
  return row;
}

}  // namespace fq
