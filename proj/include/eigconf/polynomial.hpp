#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "eigconf/rational.hpp"
#include "eigconf/sign.hpp"

namespace eigconf {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending powers. Trailing zero coefficients are trimmed on construction, so
/// the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Coefficient of x^k; zero past the degree.
  Rational coeff(int k) const;
  const Rational& leading() const;

  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const;

  /// Coefficient signs in ascending order.
  SignSequence coefficient_signs() const;

  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses the ascending list form "[c0, c1, ...]".
Polynomial parse_polynomial(std::string_view text);

Polynomial derivative(const Polynomial& p);
Polynomial multiply(const Polynomial& p, const Polynomial& q);

/// p^e for e in {0,1,2}; 0^0 = 1.
Polynomial power(const Polynomial& p, int e);

Rational evaluate(const Polynomial& p, const Rational& x);
Sign sign_at(const Polynomial& p, const Rational& x);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);

/// a / b where b is known to divide a; throws DomainError otherwise.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Monic gcd via the Euclidean remainder sequence.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree, nonconstant
  int multiplicity = 0;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun decomposition p = lc(p) * prod factor_i^multiplicity_i, factors pairwise
/// coprime, multiplicities strictly increasing. Constants give an empty list.
std::vector<SquarefreeFactor> squarefree_split(const Polynomial& p);

/// Monic product of the distinct irreducible factors of p.
Polynomial squarefree_part(const Polynomial& p);

/// 1 + max |c_i| / |c_d|; every complex root lies strictly inside.
Rational cauchy_root_bound(const Polynomial& p);

/// Sturm chain p, p', -rem(p, p'), ... with each member scaled by a positive
/// constant to keep coefficients small (signs are unaffected).
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  int variations_at(const Rational& x) const;

  /// Distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;

  std::span<const Polynomial> members() const { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

/// Number of distinct real roots of p in (a, b]. Requires a < b.
int sturm_root_count(const Polynomial& p, const Rational& a, const Rational& b);

/// Isolating interval for one distinct real root. When low == high the root
/// is exactly `low`; otherwise the root lies strictly between the endpoints and
/// neither endpoint is a root.
struct RootInterval {
  Rational low;
  Rational high;
  int multiplicity = 1;

  bool is_exact() const { return low == high; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// One bisection step on an isolating interval of a squarefree polynomial.
/// Collapses to a point interval if the midpoint is the root.
void bisect_root(const Polynomial& squarefree, RootInterval& root);

/// Sorted, pairwise disjoint isolating intervals of the distinct real roots of
/// p, each carrying its multiplicity. Rational roots come back as point
/// intervals.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

}  // namespace eigconf
