#include "eigconf/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "eigconf/errors.hpp"

namespace eigconf {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

SignSequence Polynomial::coefficient_signs() const {
  SignSequence out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.sign());
  return out;
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  if (coeffs_.empty()) os << '0';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << ']';
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial parse_polynomial(std::string_view text) {
  auto first = text.find('[');
  auto last = text.rfind(']');
  if (first == std::string_view::npos || last == std::string_view::npos || last < first) {
    throw ParseError("polynomial must be written as [c0, c1, ...]");
  }
  std::string_view body = text.substr(first + 1, last - first - 1);
  std::vector<Rational> coeffs;
  while (true) {
    auto comma = body.find(',');
    coeffs.push_back(Rational::parse(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial derivative(const Polynomial& p) {
  auto c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out;
  out.reserve(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * Rational(static_cast<long>(k)));
  return Polynomial(std::move(out));
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial power(const Polynomial& p, int e) {
  switch (e) {
    case 0: return Polynomial::constant(1);
    case 1: return p;
    case 2: return p * p;
    default: break;
  }
  throw DomainError("power: exponent must be 0, 1 or 2");
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  auto c = p.coefficients();
  Rational acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Sign sign_at(const Polynomial& p, const Rational& x) { return evaluate(p, x).sign(); }

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  int db = b.degree();
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lc = b.leading();
  auto bc = b.coefficients();
  for (int k = a.degree(); k >= db; --k) {
    Rational t = rem[static_cast<std::size_t>(k)] / lc;
    if (t.is_zero()) continue;
    quot[static_cast<std::size_t>(k - db)] = t;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= t * bc[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("exact_divide: nonzero remainder");
  return q;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  Polynomial a = p.monic();
  Polynomial b = q.monic();
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<SquarefreeFactor> squarefree_split(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree_split of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;

  Polynomial f = p.monic();
  Polynomial df = derivative(f);
  Polynomial a = gcd(f, df);
  Polynomial b = exact_divide(f, a);
  Polynomial c = exact_divide(df, a);
  Polynomial d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial g = gcd(b, d);
    b = exact_divide(b, g);
    c = exact_divide(d, g);
    d = c - derivative(b);
    if (g.degree() > 0) out.push_back({std::move(g), i});
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  Polynomial out = Polynomial::constant(1);
  for (const auto& sf : squarefree_split(p)) out = out * sf.factor;
  return out;
}

Rational cauchy_root_bound(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
  Rational lc = p.leading().abs();
  Rational best;
  auto c = p.coefficients();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) best = std::max(best, c[i].abs() / lc);
  return Rational(1) + best;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  auto normalize = [](Polynomial q) { return q * (Rational(1) / q.leading().abs()); };
  chain_.push_back(normalize(p));
  Polynomial dp = derivative(p);
  if (dp.is_zero()) return;
  chain_.push_back(normalize(dp));
  while (true) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    chain_.push_back(normalize(-r));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  SignSequence signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at(q, x));
  return variation_count(signs);
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw DomainError("Sturm count needs a < b");
  return variations_at(a) - variations_at(b);
}

int sturm_root_count(const Polynomial& p, const Rational& a, const Rational& b) {
  return SturmSequence(p).count(a, b);
}

void bisect_root(const Polynomial& squarefree, RootInterval& root) {
  if (root.is_exact()) return;
  Rational mid = (root.low + root.high) / Rational(2);
  Sign s = sign_at(squarefree, mid);
  if (s == Sign::Zero) {
    root.low = mid;
    root.high = mid;
  } else if (s == sign_at(squarefree, root.low)) {
    root.low = std::move(mid);
  } else {
    root.high = std::move(mid);
  }
}

namespace {

// lcm of the coefficient denominators: the leading coefficient of the integer
// multiple of a monic polynomial, which bounds the denominator of any rational
// root.
BigInt denominator_lcm(const Polynomial& monic) {
  BigInt l = 1;
  for (const auto& c : monic.coefficients()) {
    BigInt d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

// Collapses the interval to a point if the enclosed root of the monic
// squarefree factor is rational.
void snap_rational_root(const Polynomial& factor, RootInterval& root) {
  if (root.is_exact()) return;
  if (factor.degree() == 1) {
    Rational r = -factor.coeff(0) / factor.coeff(1);
    root.low = r;
    root.high = r;
    return;
  }
  // Distinct rationals with denominators <= L are at least 1/L^2 apart; once
  // the interval is narrower than that, the simplest rational inside is the
  // only candidate.
  BigInt l = denominator_lcm(factor);
  Rational width_limit(BigInt(1), BigInt(l * l));
  while (!root.is_exact() && !(root.high - root.low < width_limit)) bisect_root(factor, root);
  if (root.is_exact()) return;
  Rational candidate = simplest_between(root.low, root.high);
  if (evaluate(factor, candidate).is_zero()) {
    root.low = candidate;
    root.high = candidate;
  }
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("isolate_real_roots of the zero polynomial");
  auto split = squarefree_split(p);
  std::vector<RootInterval> roots;
  if (split.empty()) return roots;

  Polynomial sqf = Polynomial::constant(1);
  for (const auto& sf : split) sqf = sqf * sf.factor;
  SturmSequence sturm(sqf);
  Rational bound = cauchy_root_bound(sqf);

  // Pending open intervals (lo, hi) with non-root endpoints.
  std::vector<std::pair<Rational, Rational>> pending{{-bound, bound}};
  while (!pending.empty()) {
    auto [lo, hi] = std::move(pending.back());
    pending.pop_back();
    int k = sturm.variations_at(lo) - sturm.variations_at(hi);
    if (k == 0) continue;
    if (k == 1) {
      roots.push_back({lo, hi, 0});
      continue;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (sign_at(sqf, mid) != Sign::Zero) {
      pending.emplace_back(lo, mid);
      pending.emplace_back(std::move(mid), hi);
      continue;
    }
    roots.push_back({mid, mid, 0});
    Rational delta = (hi - lo) / Rational(4);
    while (true) {
      Rational l = mid - delta;
      Rational r = mid + delta;
      if (sign_at(sqf, l) != Sign::Zero && sign_at(sqf, r) != Sign::Zero &&
          sturm.variations_at(l) - sturm.variations_at(r) == 1) {
        pending.emplace_back(lo, std::move(l));
        pending.emplace_back(std::move(r), hi);
        break;
      }
      delta /= Rational(2);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootInterval& a, const RootInterval& b) { return a.low < b.low; });

  for (auto& root : roots) {
    for (const auto& sf : split) {
      bool hit = root.is_exact() ? evaluate(sf.factor, root.low).is_zero()
                                 : sign_at(sf.factor, root.low) != sign_at(sf.factor, root.high);
      if (hit) {
        root.multiplicity = sf.multiplicity;
        snap_rational_root(sf.factor, root);
        break;
      }
    }
  }
  return roots;
}

}  // namespace eigconf
