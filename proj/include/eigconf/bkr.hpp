#pragma once

// Combinatorial side of the signature method: exponent and sign-vector
// indexing over {0,1,2}^m and {-,0,+}^m, the Kronecker-power matrix H with its
// inverse, the variation-selector V, and the configuration-from-sign map
// tau(S) = V H^{-1} sigma(S). Nothing here depends on matrix entries.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eigconf/config.hpp"
#include "eigconf/matrix.hpp"
#include "eigconf/sign.hpp"

namespace eigconf {

/// 3^m, throwing DomainError if it would overflow std::size_t.
std::size_t pow3(int m);

/// A point of {0,1,2}^m. digits[k] is the exponent of the k-th derivative;
/// digits[0] is the most significant for the lexicographic rank.
struct ExponentIndex {
  std::vector<int> digits;

  static ExponentIndex from_rank(std::size_t rank, int m);
  std::size_t rank() const;
  std::string to_string() const;

  friend bool operator==(const ExponentIndex&, const ExponentIndex&) = default;
};

/// A point of {-,0,+}^m ranked lexicographically with - < 0 < +.
struct SignVectorIndex {
  SignSequence signs;

  static SignVectorIndex from_rank(std::size_t rank, int m);
  std::size_t rank() const;
  std::string to_string() const { return eigconf::to_string(signs); }

  friend bool operator==(const SignVectorIndex&, const SignVectorIndex&) = default;
};

/// 3^m rows (ranked by ExponentIndex) of n signs each.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(int m, int n, std::vector<SignSequence> rows);

  /// 3^m lines of exactly n characters from {-,0,+}. Blank trailing lines and
  /// '\r' are tolerated. Throws ParseError when malformed.
  static SignMatrix parse(std::string_view text, int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<SignSequence>& rows() const { return rows_; }
  const SignSequence& row(std::size_t e) const { return rows_[e]; }

  std::string to_text() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<SignSequence> rows_;
};

using SigmaVector = std::vector<int>;

/// H1^{(x) m}; H[e][s] = prod_k s_k^{e_k} with 0^0 = 1.
DenseMatrix build_H(int m);

/// (H1^{-1})^{(x) m}.
DenseMatrix build_H_inverse(int m);

/// m x 3^m selector with V[t-1][s] = 1 iff v(s+) = m - t.
DenseMatrix build_V(int m);

/// sigma_e = 2 v(S_e+) + z(S_e+) - n for each row.
SigmaVector sigma_from_sign_matrix(const SignMatrix& s);

/// q = H^{-1} sigma, applied one tensor axis at a time.
std::vector<Rational> solve_counts(const SigmaVector& sigma, int m);

/// Thrown when H^{-1} sigma(S) is not a nonnegative integer vector summing to
/// n; no pair of real symmetric matrices produces such a sign matrix.
class InfeasibleSignMatrix : public std::runtime_error {
 public:
  InfeasibleSignMatrix(const std::string& what, std::vector<Rational> q)
      : std::runtime_error(what), q_(std::move(q)) {}
  const std::vector<Rational>& q() const { return q_; }

 private:
  std::vector<Rational> q_;
};

struct TransformResult {
  SigmaVector sigma;
  std::vector<int> q;  // per sign vector s, ranked lexicographically
  EigenConfig config;
};

/// sigma, q and V q for a sign matrix. Throws InfeasibleSignMatrix.
TransformResult transform(const SignMatrix& s);

/// tau(S) = V H^{-1} sigma(S).
EigenConfig tau(const SignMatrix& s);

/// Per-m lookup used on the hot path, built once and shared across threads.
struct TransformTables {
  int m = 0;
  std::vector<int> variation_of_column;  // v(s+) for each sign vector s
};

std::shared_ptr<const TransformTables> transform_tables(int m);

}  // namespace eigconf
