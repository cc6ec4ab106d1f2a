#include "eigconf/matrix.hpp"

#include <ostream>
#include <utility>

#include "eigconf/errors.hpp"

namespace eigconf {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw DomainError("matrix entry count does not match its shape");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.front().size() : 0;
  std::vector<Rational> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DomainError("ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return DenseMatrix(r, c, std::move(data));
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in *");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

SymmetricMatrix::SymmetricMatrix(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows() == 0) throw DomainError("symmetric matrix must have dimension >= 1");
  if (!m_.is_square()) throw DomainError("symmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) throw DomainError("matrix is not symmetric");
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  return SymmetricMatrix(DenseMatrix::from_rows(rows));
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) { return SymmetricMatrix(DenseMatrix::identity(n)); }

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<Rational>& diag) {
  DenseMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return SymmetricMatrix(std::move(m));
}

Rational trace(const DenseMatrix& a) {
  if (!a.is_square()) throw DomainError("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Polynomial charpoly(const DenseMatrix& a) {
  if (!a.is_square()) throw DomainError("charpoly of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  DenseMatrix m(n, n);
  DenseMatrix am(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    am = a * m;
    c[n - k] = -trace(am) / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

Polynomial charpoly(const SymmetricMatrix& a) { return charpoly(a.dense()); }

DenseMatrix eval_poly_at_matrix(const Polynomial& p, const DenseMatrix& a) {
  if (!a.is_square()) throw DomainError("polynomial evaluation at a non-square matrix");
  const std::size_t n = a.rows();
  DenseMatrix acc(n, n);
  auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (it != c.rbegin()) acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

SymmetricMatrix eval_poly_at_matrix(const Polynomial& p, const SymmetricMatrix& a) {
  return SymmetricMatrix(eval_poly_at_matrix(p, a.dense()));
}

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

DenseMatrix invert(const DenseMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw DomainError("invert needs a nonempty square matrix");
  const std::size_t n = a.rows();

  // A = B / scale with B integral.
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt d = a(i, j).denominator();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
    }

  // Augmented integer matrix [B | I], width 2n.
  const std::size_t w = 2 * n;
  std::vector<BigInt> m(n * w);
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * w + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = (a(i, j) * Rational(scale)).numerator();
    at(i, n + i) = 1;
  }

  // Bareiss forward elimination; each division by the previous pivot is exact.
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k) == 0) ++p;
    if (p == n) throw DomainError("matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < w; ++j) std::swap(at(k, j), at(p, j));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j) {
        BigInt v = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }

  // prev is now det of the row-permuted B. Back substitution for det * X;
  // those entries are adjugate entries, hence integral, so divisions are exact.
  const BigInt det = prev;
  std::vector<BigInt> x(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      BigInt v = det * at(ii, n + c);
      for (std::size_t j = ii + 1; j < n; ++j) v -= at(ii, j) * x[j * n + c];
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), at(ii, ii).get_mpz_t());
      x[ii * n + c] = std::move(v);
    }
  }

  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = Rational(x[i * n + j] * scale, det);
  return out;
}

}  // namespace eigconf
