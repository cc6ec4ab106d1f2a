#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "eigconf/polynomial.hpp"
#include "eigconf/rational.hpp"

namespace eigconf {

/// Row-major dense matrix of rationals.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix transpose() const;
  bool is_zero() const;

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix& operator*=(const Rational& c);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, const Rational& c) { return a *= c; }
  friend DenseMatrix operator*(const Rational& c, DenseMatrix a) { return a *= c; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m);

/// Square matrix with entries(i, j) == entries(j, i), checked on construction.
class SymmetricMatrix {
 public:
  /// Throws DomainError if `m` is empty, not square, or not symmetric.
  explicit SymmetricMatrix(DenseMatrix m);

  static SymmetricMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static SymmetricMatrix identity(std::size_t n);
  static SymmetricMatrix diagonal(const std::vector<Rational>& diag);

  std::size_t dimension() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const DenseMatrix& dense() const { return m_; }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  DenseMatrix m_;
};

Rational trace(const DenseMatrix& a);

/// Monic det(xI - A) by the Faddeev-LeVerrier recurrence.
Polynomial charpoly(const DenseMatrix& a);
Polynomial charpoly(const SymmetricMatrix& a);

/// p(A) = sum c_k A^k, evaluated by Horner's scheme.
DenseMatrix eval_poly_at_matrix(const Polynomial& p, const DenseMatrix& a);
SymmetricMatrix eval_poly_at_matrix(const Polynomial& p, const SymmetricMatrix& a);

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b);

/// Exact inverse by fraction-free Gauss-Jordan elimination on the
/// denominator-cleared matrix. Throws DomainError when singular.
DenseMatrix invert(const DenseMatrix& a);

}  // namespace eigconf
