#include "eigconf/sign.hpp"

#include "eigconf/errors.hpp"

namespace eigconf {

char to_char(Sign s) {
  switch (s) {
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
    case Sign::Plus: return '+';
  }
  return '?';
}

Sign sign_from_char(char c) {
  switch (c) {
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    case '+': return Sign::Plus;
    default: break;
  }
  throw ParseError(std::string("invalid sign character '") + c + "'");
}

std::string to_string(std::span<const Sign> signs) {
  std::string out;
  out.reserve(signs.size());
  for (Sign s : signs) out.push_back(to_char(s));
  return out;
}

SignSequence parse_signs(std::string_view text) {
  SignSequence out;
  out.reserve(text.size());
  for (char c : text) out.push_back(sign_from_char(c));
  return out;
}

int variation_count(std::span<const Sign> signs) {
  int count = 0;
  Sign last = Sign::Zero;
  for (Sign s : signs) {
    if (s == Sign::Zero) continue;
    if (last != Sign::Zero && s != last) ++count;
    last = s;
  }
  return count;
}

int leading_zero_count(std::span<const Sign> signs) {
  int count = 0;
  for (Sign s : signs) {
    if (s != Sign::Zero) break;
    ++count;
  }
  return count;
}

SignSequence with_plus(std::span<const Sign> signs) {
  SignSequence out(signs.begin(), signs.end());
  out.push_back(Sign::Plus);
  return out;
}

}  // namespace eigconf
