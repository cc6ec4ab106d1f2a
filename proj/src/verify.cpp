#include "eigconf/verify.hpp"

namespace eigconf {

CrossValidation cross_validate(const SymmetricMatrix& f_matrix, const SymmetricMatrix& g_matrix,
                               const EngineOptions& options) {
  CrossValidation report;
  EngineResult engine = eigen_configuration(f_matrix, g_matrix, options);
  report.engine = engine.config;
  report.oracle = eigen_configuration_oracle(f_matrix, g_matrix);
  report.agree = report.engine == report.oracle;
  if (!report.agree) report.trace = std::move(engine.trace);
  return report;
}

}  // namespace eigconf
