#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eigconf {

/// counts[t-1] is the number of eigenvalues of G (with multiplicity) in
/// [alpha_t, alpha_{t+1}), alpha_{m+1} = +infinity.
struct EigenConfig {
  std::vector<int> counts;

  std::size_t size() const { return counts.size(); }
  int total() const;
  std::string to_string() const;

  friend bool operator==(const EigenConfig&, const EigenConfig&) = default;
};

std::ostream& operator<<(std::ostream& os, const EigenConfig& c);

}  // namespace eigconf
