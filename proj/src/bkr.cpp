#include "eigconf/bkr.hpp"

#include <limits>
#include <map>
#include <mutex>

#include "eigconf/errors.hpp"

namespace eigconf {

std::size_t pow3(int m) {
  if (m < 0) throw DomainError("negative exponent for 3^m");
  std::size_t r = 1;
  for (int i = 0; i < m; ++i) {
    if (r > std::numeric_limits<std::size_t>::max() / 3) throw DomainError("3^m overflows");
    r *= 3;
  }
  return r;
}

ExponentIndex ExponentIndex::from_rank(std::size_t rank, int m) {
  if (rank >= pow3(m)) throw DomainError("exponent rank out of range");
  ExponentIndex e{std::vector<int>(static_cast<std::size_t>(m))};
  for (int k = m - 1; k >= 0; --k) {
    e.digits[static_cast<std::size_t>(k)] = static_cast<int>(rank % 3);
    rank /= 3;
  }
  return e;
}

std::size_t ExponentIndex::rank() const {
  std::size_t r = 0;
  for (int d : digits) {
    if (d < 0 || d > 2) throw DomainError("exponent digit outside {0,1,2}");
    r = r * 3 + static_cast<std::size_t>(d);
  }
  return r;
}

std::string ExponentIndex::to_string() const {
  std::string s;
  for (int d : digits) s.push_back(static_cast<char>('0' + d));
  return s;
}

SignVectorIndex SignVectorIndex::from_rank(std::size_t rank, int m) {
  if (rank >= pow3(m)) throw DomainError("sign-vector rank out of range");
  SignVectorIndex s{SignSequence(static_cast<std::size_t>(m))};
  for (int k = m - 1; k >= 0; --k) {
    s.signs[static_cast<std::size_t>(k)] = static_cast<Sign>(static_cast<int>(rank % 3) - 1);
    rank /= 3;
  }
  return s;
}

std::size_t SignVectorIndex::rank() const {
  std::size_t r = 0;
  for (Sign s : signs) r = r * 3 + static_cast<std::size_t>(static_cast<int>(s) + 1);
  return r;
}

SignMatrix::SignMatrix(int m, int n, std::vector<SignSequence> rows) : m_(m), n_(n), rows_(std::move(rows)) {
  if (m < 1 || n < 1) throw DomainError("sign matrix needs m >= 1 and n >= 1");
  if (rows_.size() != pow3(m)) throw DomainError("sign matrix must have 3^m rows");
  for (const auto& r : rows_)
    if (r.size() != static_cast<std::size_t>(n)) throw DomainError("sign matrix row length must be n");
}

SignMatrix SignMatrix::parse(std::string_view text, int m, int n) {
  if (m < 1 || n < 1) throw ParseError("sign matrix needs m >= 1 and n >= 1");
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  const std::size_t expected = pow3(m);
  if (lines.size() != expected) {
    throw ParseError("sign matrix has " + std::to_string(lines.size()) + " lines, expected 3^" +
                     std::to_string(m) + " = " + std::to_string(expected));
  }
  std::vector<SignSequence> rows;
  rows.reserve(expected);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != static_cast<std::size_t>(n)) {
      throw ParseError("sign matrix line " + std::to_string(i + 1) + " has " + std::to_string(lines[i].size()) +
                       " characters, expected " + std::to_string(n));
    }
    rows.push_back(parse_signs(lines[i]));
  }
  return SignMatrix(m, n, std::move(rows));
}

std::string SignMatrix::to_text() const {
  std::string out;
  for (const auto& r : rows_) {
    out += eigconf::to_string(r);
    out.push_back('\n');
  }
  return out;
}

namespace {

DenseMatrix h1() {
  return DenseMatrix::from_rows({{1, 1, 1}, {-1, 0, 1}, {1, 0, 1}});
}

DenseMatrix h1_inverse() {
  Rational half(BigInt(1), BigInt(2));
  return DenseMatrix::from_rows({{0, -half, half}, {1, 0, -1}, {0, half, half}});
}

DenseMatrix kronecker_power(const DenseMatrix& base, int m) {
  if (m < 1) throw DomainError("Kronecker power needs m >= 1");
  DenseMatrix out = base;
  for (int i = 1; i < m; ++i) out = kronecker(out, base);
  return out;
}

}  // namespace

DenseMatrix build_H(int m) { return kronecker_power(h1(), m); }

DenseMatrix build_H_inverse(int m) { return kronecker_power(h1_inverse(), m); }

DenseMatrix build_V(int m) {
  auto tables = transform_tables(m);
  const std::size_t cols = pow3(m);
  DenseMatrix v(static_cast<std::size_t>(m), cols);
  for (std::size_t s = 0; s < cols; ++s) {
    int t = m - tables->variation_of_column[s];
    if (t >= 1 && t <= m) v(static_cast<std::size_t>(t - 1), s) = 1;
  }
  return v;
}

SigmaVector sigma_from_sign_matrix(const SignMatrix& s) {
  SigmaVector sigma;
  sigma.reserve(s.rows().size());
  for (const auto& row : s.rows()) {
    SignSequence full = with_plus(row);
    sigma.push_back(2 * variation_count(full) + leading_zero_count(full) - s.n());
  }
  return sigma;
}

std::vector<Rational> solve_counts(const SigmaVector& sigma, int m) {
  const std::size_t size = pow3(m);
  if (sigma.size() != size) throw DomainError("sigma must have 3^m entries");
  const DenseMatrix inv = h1_inverse();
  std::vector<Rational> q(sigma.begin(), sigma.end());
  // Axis k has stride 3^(m-1-k); digit 0 is the most significant.
  std::size_t stride = size / 3;
  for (int k = 0; k < m; ++k, stride /= 3) {
    for (std::size_t base = 0; base < size; ++base) {
      if ((base / stride) % 3 != 0) continue;
      const Rational x0 = q[base];
      const Rational x1 = q[base + stride];
      const Rational x2 = q[base + 2 * stride];
      for (std::size_t r = 0; r < 3; ++r) q[base + r * stride] = inv(r, 0) * x0 + inv(r, 1) * x1 + inv(r, 2) * x2;
    }
  }
  return q;
}

TransformResult transform(const SignMatrix& s) {
  TransformResult out;
  out.sigma = sigma_from_sign_matrix(s);
  std::vector<Rational> q = solve_counts(out.sigma, s.m());

  Rational sum;
  for (const auto& x : q) {
    if (!x.is_integer() || x.sign() == Sign::Minus) {
      std::string msg = "H^-1 sigma has entry " + x.to_string() + "; not a count vector";
      throw InfeasibleSignMatrix(msg, std::move(q));
    }
    sum += x;
  }
  if (sum != Rational(s.n())) {
    std::string msg = "H^-1 sigma sums to " + sum.to_string() + ", expected n = " + std::to_string(s.n());
    throw InfeasibleSignMatrix(msg, std::move(q));
  }

  out.q.reserve(q.size());
  for (const auto& x : q) out.q.push_back(static_cast<int>(x.numerator().get_si()));

  auto tables = transform_tables(s.m());
  out.config.counts.assign(static_cast<std::size_t>(s.m()), 0);
  for (std::size_t col = 0; col < out.q.size(); ++col) {
    int t = s.m() - tables->variation_of_column[col];
    if (t >= 1) out.config.counts[static_cast<std::size_t>(t - 1)] += out.q[col];
  }
  return out;
}

EigenConfig tau(const SignMatrix& s) { return transform(s).config; }

std::shared_ptr<const TransformTables> transform_tables(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const TransformTables>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  auto tables = std::make_shared<TransformTables>();
  tables->m = m;
  const std::size_t cols = pow3(m);
  tables->variation_of_column.reserve(cols);
  for (std::size_t s = 0; s < cols; ++s) {
    tables->variation_of_column.push_back(variation_count(with_plus(SignVectorIndex::from_rank(s, m).signs)));
  }
  cache.emplace(m, tables);
  return tables;
}

}  // namespace eigconf
