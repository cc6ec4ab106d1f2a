#pragma once

#include <optional>

#include "eigconf/engine.hpp"
#include "eigconf/oracle.hpp"

namespace eigconf {

struct CrossValidation {
  EigenConfig engine;
  EigenConfig oracle;
  bool agree = false;
  /// Engine trace, kept only when the two disagree.
  std::optional<PipelineTrace> trace;
};

/// Runs the signature pipeline and the root-isolation oracle on the same pair.
/// Disagreement is reported, not thrown.
CrossValidation cross_validate(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix,
                               const EngineOptions& options = {});

}  // namespace eigconf
