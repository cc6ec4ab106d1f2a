#include "eigconf/instances.hpp"

#include <numeric>

#include "eigconf/errors.hpp"

namespace eigconf {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("uniform: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t threshold = (0 - range) % range;
  while (true) {
    std::uint64_t x = next();
    if (x >= threshold) return lo + static_cast<std::int64_t>(x % range);
  }
}

std::string to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::None: return "none";
    case Degeneracy::RepeatedEigenvalues: return "repeated";
    case Degeneracy::SharedEigenvalues: return "shared";
  }
  return "unknown";
}

namespace {

DenseMatrix random_block(std::size_t n, int bound, SplitMix64& rng) {
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational v(static_cast<long long>(rng.uniform(-bound, bound)));
      a(i, j) = v;
      a(j, i) = v;
    }
  return a;
}

DenseMatrix block_diag(const std::vector<DenseMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  DenseMatrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

// P A P^T for a uniformly random permutation P; the spectrum is unchanged.
SymmetricMatrix shuffled(const DenseMatrix& a, SplitMix64& rng) {
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = perm.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i - 1)));
    std::swap(perm[i - 1], perm[j]);
  }
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(perm[i], perm[j]);
  return SymmetricMatrix(std::move(out));
}

// Matrix of size n whose spectrum repeats: diag(B, B, rest).
DenseMatrix with_repeated_block(std::size_t n, int bound, SplitMix64& rng) {
  std::size_t k = n / 2;
  DenseMatrix b = random_block(k, bound, rng);
  std::vector<DenseMatrix> blocks{b, b};
  if (n > 2 * k) blocks.push_back(random_block(n - 2 * k, bound, rng));
  return block_diag(blocks);
}

}  // namespace

SymmetricMatrix random_symmetric(std::size_t n, int bound, SplitMix64& rng) {
  return SymmetricMatrix(random_block(n, bound, rng));
}

Instance random_instance(int m, int n, int bound, Degeneracy kind, SplitMix64& rng) {
  if (m < 1 || n < 1) throw DomainError("instance dimensions must be >= 1");
  if (bound < 1) throw DomainError("entry bound must be >= 1");
  const auto mm = static_cast<std::size_t>(m);
  const auto nn = static_cast<std::size_t>(n);

  if (kind == Degeneracy::RepeatedEigenvalues && m == 1 && n == 1) kind = Degeneracy::SharedEigenvalues;

  DenseMatrix f;
  DenseMatrix g;
  switch (kind) {
    case Degeneracy::None:
      f = random_block(mm, bound, rng);
      g = random_block(nn, bound, rng);
      break;
    case Degeneracy::RepeatedEigenvalues:
      if (m >= 2) {
        f = with_repeated_block(mm, bound, rng);
        g = random_block(nn, bound, rng);
      } else {
        f = random_block(mm, bound, rng);
        g = with_repeated_block(nn, bound, rng);
      }
      break;
    case Degeneracy::SharedEigenvalues: {
      std::size_t k = std::max<std::size_t>(1, std::min(mm, nn) / 2);
      DenseMatrix common = random_block(k, bound, rng);
      std::vector<DenseMatrix> fb{common};
      std::vector<DenseMatrix> gb{common};
      if (mm > k) fb.push_back(random_block(mm - k, bound, rng));
      if (nn > k) gb.push_back(random_block(nn - k, bound, rng));
      f = block_diag(fb);
      g = block_diag(gb);
      break;
    }
  }
  return {shuffled(f, rng), shuffled(g, rng), kind};
}

std::vector<Instance> random_instances(int m, int n, std::uint64_t seed, int bound, int count) {
  SplitMix64 rng(seed);
  std::vector<Instance> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    Degeneracy kind = Degeneracy::None;
    if (i % 4 == 3) kind = (i / 4) % 2 == 0 ? Degeneracy::RepeatedEigenvalues : Degeneracy::SharedEigenvalues;
    out.push_back(random_instance(m, n, bound, kind, rng));
  }
  return out;
}

}  // namespace eigconf
