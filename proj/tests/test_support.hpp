#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// these helpers are used to check.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <vector>

#include "eigconf/config.hpp"
#include "eigconf/instances.hpp"
#include "eigconf/matrix.hpp"
#include "eigconf/polynomial.hpp"

namespace eigconf {

// gtest failure messages.
inline void PrintTo(const RootInterval& r, std::ostream* os) {
  *os << "{" << r.low << ", " << r.high << ", x" << r.multiplicity << "}";
}
inline void PrintTo(const SquarefreeFactor& f, std::ostream* os) { *os << f.factor << "^" << f.multiplicity; }

}  // namespace eigconf

namespace eigconf::testing {

inline Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

/// det(xI - A) by Laplace expansion over polynomial entries.
inline Polynomial cofactor_charpoly(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = Polynomial::constant(-a(i, j));
      if (i == j) m[i][j] += Polynomial::x();
    }
  auto det = [](auto&& self, const std::vector<std::vector<Polynomial>>& mat) -> Polynomial {
    const std::size_t k = mat.size();
    if (k == 1) return mat[0][0];
    Polynomial total;
    for (std::size_t col = 0; col < k; ++col) {
      std::vector<std::vector<Polynomial>> minor;
      for (std::size_t r = 1; r < k; ++r) {
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < k; ++c)
          if (c != col) row.push_back(mat[r][c]);
        minor.push_back(std::move(row));
      }
      Polynomial term = mat[0][col] * self(self, minor);
      if (col % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    return total;
  };
  return det(det, m);
}

/// c_t = #{beta in [alpha_t, alpha_{t+1})} on explicit rational spectra.
inline EigenConfig direct_configuration(std::vector<Rational> alpha, std::vector<Rational> beta) {
  std::sort(alpha.begin(), alpha.end());
  EigenConfig c;
  c.counts.assign(alpha.size(), 0);
  for (const auto& b : beta) {
    auto below = std::upper_bound(alpha.begin(), alpha.end(), b) - alpha.begin();
    if (below > 0) ++c.counts[static_cast<std::size_t>(below - 1)];
  }
  return c;
}

inline std::vector<Rational> random_rationals(SplitMix64& rng, std::size_t n, int bound, int max_den = 1) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    long num = static_cast<long>(rng.uniform(-bound, bound));
    long den = static_cast<long>(rng.uniform(1, max_den));
    out.push_back(q(num, den));
  }
  return out;
}

inline Polynomial random_polynomial(SplitMix64& rng, int degree, int bound) {
  auto c = random_rationals(rng, static_cast<std::size_t>(degree + 1), bound, 3);
  return Polynomial(std::move(c));
}

inline DenseMatrix random_dense(SplitMix64& rng, std::size_t rows, std::size_t cols, int bound) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(static_cast<long long>(rng.uniform(-bound, bound)));
  return m;
}

/// Polynomial with exactly the given roots (monic).
inline Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : roots) p = p * Polynomial({-r, Rational(1)});
  return p;
}

inline DenseMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  DenseMatrix p(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = 1;
  return p;
}

inline std::vector<std::size_t> random_permutation(SplitMix64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i - 1)))]);
  return perm;
}

/// P A P^T.
inline SymmetricMatrix conjugate(const DenseMatrix& p, const SymmetricMatrix& a) {
  return SymmetricMatrix(p * a.dense() * p.transpose());
}

inline SymmetricMatrix shift(const SymmetricMatrix& a, const Rational& t) {
  return SymmetricMatrix(a.dense() + DenseMatrix::identity(a.dimension()) * t);
}

inline SymmetricMatrix scale(const SymmetricMatrix& a, const Rational& c) { return SymmetricMatrix(a.dense() * c); }

/// EC(-F,-G) expected from c = EC(F,G) when alphas are distinct and no beta
/// equals an alpha: (c_{m-1}, ..., c_1, n - sum c).
inline EigenConfig negation_reversal(const EigenConfig& c, int n) {
  EigenConfig out;
  const std::size_t m = c.size();
  for (std::size_t t = m - 1; t >= 1; --t) out.counts.push_back(c.counts[t - 1]);
  out.counts.push_back(n - c.total());
  return out;
}

}  // namespace eigconf::testing
