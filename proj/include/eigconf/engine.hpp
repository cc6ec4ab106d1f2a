#pragma once

// Signature pipeline: f = charpoly(F), f_e = prod_k (f^(k))^{e_k},
// h_e = charpoly(f_e(G)), D[e][j] = coeff(h_e, x^j), then tau(sign D).

#include <vector>

#include "eigconf/bkr.hpp"
#include "eigconf/config.hpp"
#include "eigconf/matrix.hpp"
#include "eigconf/polynomial.hpp"

namespace eigconf {

struct EngineOptions {
  /// Worker threads for the 3^m rows; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Keep f_e, f_e(G) and h_e for every row in the trace.
  bool keep_rows = false;
  /// Reduce f_e modulo charpoly(G) before evaluating at G. Same result by
  /// Cayley-Hamilton; turning it off evaluates the full product by Horner.
  bool reduce_modulo_charpoly = true;
};

/// 3^m x n coefficient matrix; h_e is monic of degree n and its leading
/// coefficient is not stored.
struct DiscriminantSystem {
  int m = 0;
  int n = 0;
  std::vector<std::vector<Rational>> entries;

  SignMatrix signs() const;
};

struct RowTrace {
  Polynomial fe;
  DenseMatrix fe_at_g;
  Polynomial h;
};

struct PipelineTrace {
  /// Common positive scalar applied to F and G so both become integral.
  Rational scale = 1;
  Polynomial f;
  std::vector<Polynomial> derivatives;  // f^(0) .. f^(m-1)
  std::vector<RowTrace> rows;           // empty unless keep_rows
  SignMatrix sign_matrix;
  SigmaVector sigma;
  std::vector<int> q;
  EigenConfig config;
};

struct EngineResult {
  EigenConfig config;
  PipelineTrace trace;
};

/// prod_k (f^(k))^{e_k}; e must have deg f digits.
Polynomial build_fe(const Polynomial& f, const ExponentIndex& e);

/// D for the given matrices, without any rescaling.
DiscriminantSystem discriminant_system(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix,
                                       const EngineOptions& options = {});

/// Eigenvalue configuration via the discriminant system and tau. Throws
/// std::logic_error if the sign matrix it produced turns out infeasible, which
/// would be an internal bug.
EngineResult eigen_configuration(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix,
                                 const EngineOptions& options = {});

/// True iff `config` is the eigenvalue configuration of (F, G).
bool check_configuration(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix,
                         const EigenConfig& config, const EngineOptions& options = {});

/// #positive - #negative eigenvalues, read off the charpoly coefficient signs
/// as 2 v + z - n.
int matrix_signature(const SymmetricMatrix& a);

/// Least common multiple of all entry denominators of both matrices.
BigInt common_denominator(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix);

}  // namespace eigconf
