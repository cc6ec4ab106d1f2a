#pragma once

// Reproducible random test instances.
//
// The generator is SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15,
// then the output is the state mixed by two xor-shift-multiply rounds. Integers
// in [lo, hi] are drawn by rejection sampling on the 64-bit output, so the
// stream and therefore every generated file is identical on all platforms.

#include <cstdint>
#include <string>
#include <vector>

#include "eigconf/matrix.hpp"

namespace eigconf {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform integer in [lo, hi], unbiased.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

enum class Degeneracy {
  None,
  RepeatedEigenvalues,  // a block appears twice on the diagonal of F (or G)
  SharedEigenvalues,    // F and G contain a common diagonal block
};

std::string to_string(Degeneracy d);

struct Instance {
  SymmetricMatrix f;
  SymmetricMatrix g;
  Degeneracy degeneracy = Degeneracy::None;
};

/// Symmetric n x n matrix with entries uniform in [-bound, bound].
SymmetricMatrix random_symmetric(std::size_t n, int bound, SplitMix64& rng);

Instance random_instance(int m, int n, int bound, Degeneracy kind, SplitMix64& rng);

/// `count` instances from one seed. Every 4th instance (index 3, 7, ...) is
/// degenerate, alternating between repeated and shared eigenvalues.
std::vector<Instance> random_instances(int m, int n, std::uint64_t seed, int bound, int count);

}  // namespace eigconf
