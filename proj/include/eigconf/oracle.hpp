#pragma once

// Ground-truth eigenvalue configuration straight from the definition: isolate
// the eigenvalues of F and G exactly and count each beta into its half-open
// interval [alpha_t, alpha_{t+1}). Shares no code with the signature pipeline
// beyond the polynomial and matrix kernels.

#include <cstddef>
#include <vector>

#include "eigconf/config.hpp"
#include "eigconf/matrix.hpp"
#include "eigconf/polynomial.hpp"

namespace eigconf {

struct IsolatedSpectrum {
  Polynomial charpoly;
  std::vector<RootInterval> roots;  // sorted, disjoint, with multiplicities

  int total_multiplicity() const;
};

/// Throws std::logic_error if the multiplicities do not add up to the
/// dimension (which would mean a non-real eigenvalue, impossible for symmetric
/// input).
IsolatedSpectrum isolated_spectrum(const SymmetricMatrix& a);

/// alpha root `alpha_index` and beta root `beta_index` are the same number,
/// certified by a root of gcd(sqf f_F, sqf f_G) inside `where`.
struct BoundaryTie {
  std::size_t alpha_index = 0;
  std::size_t beta_index = 0;
  RootInterval where;
};

struct OracleResult {
  EigenConfig config;
  std::vector<BoundaryTie> ties;
  int below_first = 0;  // betas (with multiplicity) smaller than alpha_1
};

OracleResult configuration_with_ties(const IsolatedSpectrum& alpha, const IsolatedSpectrum& beta);

EigenConfig configuration_from_spectra(const IsolatedSpectrum& alpha, const IsolatedSpectrum& beta);

EigenConfig eigen_configuration_oracle(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix);

}  // namespace eigconf
