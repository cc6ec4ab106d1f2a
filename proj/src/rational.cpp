#include "eigconf/rational.hpp"

#include <cctype>
#include <ostream>

#include "eigconf/errors.hpp"

namespace eigconf {

Rational::Rational(long long v) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");
  value_ = static_cast<long>(v);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

Sign Rational::sign() const {
  int s = sgn(value_);
  return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Sign sign_of(const Rational& x) { return x.sign(); }

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw DomainError("simplest_between: empty interval");
  if (lo.sign() != Sign::Plus && hi.sign() != Sign::Minus) return Rational(0);
  if (hi.sign() == Sign::Minus) return -simplest_between(-hi, -lo);

  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.raw().get_num_mpz_t(), lo.raw().get_den_mpz_t());
  if (lo.is_integer()) return lo;
  Rational next(BigInt(fl + 1));
  if (next <= hi) return next;
  // lo and hi share the integer part fl; recurse on the reciprocals of the
  // fractional parts (continued-fraction step).
  Rational base(fl);
  Rational inner = simplest_between(Rational(1) / (hi - base), Rational(1) / (lo - base));
  return base + Rational(1) / inner;
}

}  // namespace eigconf
